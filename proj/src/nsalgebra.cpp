// SPDX-License-Identifier: MIT
#include "axc/nsalgebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace axc::ns {

const Rat kEigen[4] = {frac(1), frac(0), frac(1, 4), frac(1, 32)};

bool fusion_allows(int a, int b, int c) {
    if (a > b) std::swap(a, b);
    // rows: 1, 0, 1/4, 1/32
    static const std::set<int> law[4][4] = {
        {{0}, {}, {2}, {3}},
        {{}, {1}, {2}, {3}},
        {{2}, {2}, {0, 1}, {3}},
        {{3}, {3}, {3}, {0, 1, 2}},
    };
    return law[a][b].count(c) > 0;
}

int grading(int a) { return a == 3 ? -1 : 1; }

int AxialAlgebra::axis(int i) const {
    int k = ((i - lo) % m + m) % m;
    return axes[k];
}

int AxialAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::out_of_range("no basis element " + label + " in " + type);
}

Vec AxialAlgebra::basis(int i) const {
    Vec v(dim());
    v[i] = 1;
    return v;
}

Vec AxialAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] == 0) continue;
            const auto& p = prod[i][j];
            if (!p) throw std::logic_error("undetermined product " + labels[i] + "*" + labels[j]);
            Rat c = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if ((*p)[k] != 0) out[k] += c * (*p)[k];
        }
    }
    return out;
}

Rat AxialAlgebra::form(const Vec& x, const Vec& y) const {
    Rat s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] == 0) continue;
            const auto& f = form_tab[i][j];
            if (!f) throw std::logic_error("undetermined pairing " + labels[i] + "," + labels[j]);
            s += x[i] * y[j] * *f;
        }
    }
    return s;
}

RatMatrix AxialAlgebra::gram() const {
    RatMatrix g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) g(i, j) = form_tab[i][j].value_or(Rat(0));
    return g;
}

RatMatrix AxialAlgebra::adjoint(int b) const {
    RatMatrix a(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        const auto& p = prod[b][j];
        if (!p) throw std::logic_error("undetermined product in adjoint");
        for (std::size_t i = 0; i < dim(); ++i) a(i, j) = (*p)[i];
    }
    return a;
}

namespace {

struct Rule {
    std::string x, y;
    std::vector<std::pair<Rat, std::string>> rhs;
};
struct FormRule {
    std::string x, y;
    Rat value;
};

struct Spec {
    int m, lo;
    std::vector<std::string> odd;
    std::vector<Rule> prods;
    std::vector<FormRule> forms;
};

Rat q(long a, long b = 1) { return frac(a, b); }

Spec spec_for(const std::string& t) {
    if (t == "1A") return {1, 0, {}, {}, {}};
    if (t == "2A")
        return {2, 0, {"ar"},
                {{"a0", "a1", {{q(1, 8), "a0"}, {q(1, 8), "a1"}, {q(-1, 8), "ar"}}},
                 {"a0", "ar", {{q(1, 8), "a0"}, {q(1, 8), "ar"}, {q(-1, 8), "a1"}}},
                 {"ar", "ar", {{q(1), "ar"}}}},
                {{"a0", "a1", q(1, 8)}, {"a0", "ar", q(1, 8)}, {"ar", "ar", q(1)}}};
    if (t == "2B") return {2, 0, {}, {{"a0", "a1", {}}}, {{"a0", "a1", q(0)}}};
    if (t == "3A")
        return {3, -1, {"u"},
                {{"a0", "a1", {{q(2, 32), "a0"}, {q(2, 32), "a1"}, {q(1, 32), "a-1"}, {q(-135, 2048), "u"}}},
                 {"a0", "u", {{q(2, 9), "a0"}, {q(-1, 9), "a1"}, {q(-1, 9), "a-1"}, {q(5, 32), "u"}}},
                 {"u", "u", {{q(1), "u"}}}},
                {{"a0", "a1", q(13, 256)}, {"a0", "u", q(1, 4)}, {"u", "u", q(8, 5)}}};
    if (t == "3C")
        return {3, -1, {},
                {{"a0", "a1", {{q(1, 64), "a0"}, {q(1, 64), "a1"}, {q(-1, 64), "a-1"}}}},
                {{"a0", "a1", q(1, 64)}}};
    if (t == "4A")
        return {4, -1, {"v"},
                {{"a0", "a1", {{q(3, 64), "a0"}, {q(3, 64), "a1"}, {q(1, 64), "a-1"}, {q(1, 64), "a2"}, {q(-3, 64), "v"}}},
                 {"a0", "a2", {}},
                 {"a0", "v", {{q(5, 16), "a0"}, {q(-2, 16), "a1"}, {q(-2, 16), "a-1"}, {q(-1, 16), "a2"}, {q(3, 16), "v"}}},
                 {"v", "v", {{q(1), "v"}}}},
                {{"a0", "a1", q(1, 32)}, {"a0", "a2", q(0)}, {"a0", "v", q(3, 8)}, {"v", "v", q(2)}}};
    if (t == "4B")
        return {4, -1, {"ar2"},
                {{"a0", "a1", {{q(1, 64), "a0"}, {q(1, 64), "a1"}, {q(-1, 64), "a-1"}, {q(-1, 64), "a2"}, {q(1, 64), "ar2"}}},
                 {"a0", "a2", {{q(1, 8), "a0"}, {q(1, 8), "a2"}, {q(-1, 8), "ar2"}}},
                 // from the 2A subalgebra on a0, a2
                 {"a0", "ar2", {{q(1, 8), "a0"}, {q(1, 8), "ar2"}, {q(-1, 8), "a2"}}},
                 {"ar2", "ar2", {{q(1), "ar2"}}}},
                {{"a0", "a1", q(1, 64)}, {"a0", "a2", q(1, 8)}, {"a0", "ar2", q(1, 8)}, {"ar2", "ar2", q(1)}}};
    if (t == "5A") {
        Rat c = q(175, 1L << 19);
        return {5, -2, {"w"},
                {{"a0", "a1", {{q(3, 128), "a0"}, {q(3, 128), "a1"}, {q(-1, 128), "a2"}, {q(-1, 128), "a-1"}, {q(-1, 128), "a-2"}, {q(1), "w"}}},
                 {"a0", "a2", {{q(3, 128), "a0"}, {q(3, 128), "a2"}, {q(-1, 128), "a1"}, {q(-1, 128), "a-1"}, {q(-1, 128), "a-2"}, {q(-1), "w"}}},
                 {"a0", "w", {{q(7, 4096), "a1"}, {q(7, 4096), "a-1"}, {q(-7, 4096), "a2"}, {q(-7, 4096), "a-2"}, {q(7, 32), "w"}}},
                 {"w", "w", {{c, "a-2"}, {c, "a-1"}, {c, "a0"}, {c, "a1"}, {c, "a2"}}}},
                {{"a0", "a1", q(3, 128)}, {"a0", "w", q(0)}, {"w", "w", q(875, 1L << 19)}}};
    }
    if (t == "6A")
        return {6, -2, {"ar3", "ur2"},
                {{"a0", "a1", {{q(1, 64), "a0"}, {q(1, 64), "a1"}, {q(-1, 64), "a-1"}, {q(-1, 64), "a2"}, {q(-1, 64), "a-2"},
                               {q(-1, 64), "a3"}, {q(1, 64), "ar3"}, {q(45, 2048), "ur2"}}},
                 {"a0", "a2", {{q(2, 32), "a0"}, {q(2, 32), "a2"}, {q(1, 32), "a-2"}, {q(-135, 2048), "ur2"}}},
                 {"a0", "a3", {{q(1, 8), "a0"}, {q(1, 8), "a3"}, {q(-1, 8), "ar3"}}},
                 {"a0", "ur2", {{q(2, 9), "a0"}, {q(-1, 9), "a2"}, {q(-1, 9), "a-2"}, {q(5, 32), "ur2"}}},
                 {"ar3", "ur2", {}},
                 // 2A subalgebra on a0, a3 and 3A subalgebra on a0, a2, a-2
                 {"a0", "ar3", {{q(1, 8), "a0"}, {q(1, 8), "ar3"}, {q(-1, 8), "a3"}}},
                 {"ar3", "ar3", {{q(1), "ar3"}}},
                 {"ur2", "ur2", {{q(1), "ur2"}}}},
                {{"a0", "a1", q(5, 256)}, {"a0", "a2", q(13, 256)}, {"a0", "a3", q(1, 8)}, {"ar3", "ur2", q(0)},
                 {"a0", "ar3", q(1, 8)}, {"ar3", "ar3", q(1)}, {"a0", "ur2", q(1, 4)}, {"ur2", "ur2", q(8, 5)}}};
    throw std::invalid_argument("unknown Norton-Sakuma type " + t);
}

// Basis permutations induced by i -> i+2, i -> -i and i -> 1-i on axis indices; odd axes fixed.
std::vector<std::vector<int>> symmetry_group(const AxialAlgebra& a) {
    int d = static_cast<int>(a.dim());
    auto make = [&](const std::function<int(int)>& f) {
        std::vector<int> p(d);
        for (int i = 0; i < d; ++i) p[i] = i;
        for (int k = 0; k < a.m; ++k) p[a.axes[k]] = a.axis(f(a.lo + k));
        return p;
    };
    std::vector<std::vector<int>> gens = {make([](int i) { return i + 2; }), make([](int i) { return -i; }),
                                          make([](int i) { return 1 - i; })};
    std::vector<int> id(d);
    for (int i = 0; i < d; ++i) id[i] = i;
    std::vector<std::vector<int>> group{id};
    std::set<std::vector<int>> seen{id};
    for (std::size_t i = 0; i < group.size(); ++i)
        for (const auto& g : gens) {
            std::vector<int> h(d);
            for (int x = 0; x < d; ++x) h[x] = g[group[i][x]];
            if (seen.insert(h).second) group.push_back(h);
        }
    return group;
}

void set_prod(AxialAlgebra& a, int x, int y, const Vec& v) {
    for (auto [i, j] : {std::pair{x, y}, std::pair{y, x}}) {
        auto& slot = a.prod[i][j];
        if (slot && *slot != v)
            throw std::runtime_error(a.type + ": contradictory completion of " + a.labels[x] + "*" + a.labels[y]);
        slot = v;
    }
}

void set_form(AxialAlgebra& a, int x, int y, const Rat& v) {
    for (auto [i, j] : {std::pair{x, y}, std::pair{y, x}}) {
        auto& slot = a.form_tab[i][j];
        if (slot && *slot != v)
            throw std::runtime_error(a.type + ": contradictory pairing " + a.labels[x] + "," + a.labels[y]);
        slot = v;
    }
}

// Unknown pairings that Frobenius identities pin down uniquely.
void complete_form_by_frobenius(AxialAlgebra& a) {
    int d = static_cast<int>(a.dim());
    std::map<std::pair<int, int>, int> var;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            if (!a.form_tab[i][j]) var.emplace(std::pair{i, j}, static_cast<int>(var.size()));
    if (var.empty()) return;
    std::size_t nv = var.size();
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    // (xy, z) - (x, yz) = 0, split into known and unknown pairings
    auto accumulate = [&](const Vec& u, int z, Rat sign, std::vector<Rat>& row, Rat& c) {
        for (int k = 0; k < d; ++k) {
            if (u[k] == 0) continue;
            int i = std::min(k, z), j = std::max(k, z);
            if (a.form_tab[i][j]) c -= sign * u[k] * *a.form_tab[i][j];
            else row[var.at({i, j})] += sign * u[k];
        }
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                if (!a.prod[x][y] || !a.prod[y][z]) continue;
                std::vector<Rat> row(nv);
                Rat c = 0;
                accumulate(*a.prod[x][y], z, 1, row, c);
                accumulate(*a.prod[y][z], x, -1, row, c);
                if (std::any_of(row.begin(), row.end(), [](const Rat& r) { return r != 0; })) {
                    rows.push_back(row);
                    rhs.push_back(c);
                }
            }
    if (rows.empty()) return;
    RatMatrix m = RatMatrix::from_rows(rows);
    auto sol = solve(m, rhs);
    if (!sol) throw std::runtime_error(a.type + ": Frobenius identities inconsistent with the listed pairings");
    auto ns = nullspace(m);
    for (const auto& [ij, k] : var) {
        bool fixed = std::all_of(ns.begin(), ns.end(), [&](const Vec& v) { return v[k] == 0; });
        if (fixed) set_form(a, ij.first, ij.second, (*sol)[k]);
    }
}

}  // namespace

const std::vector<std::string>& types() {
    static const std::vector<std::string> t = {"1A", "2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"};
    return t;
}

AxialAlgebra build(const std::string& type) {
    Spec s = spec_for(type);
    AxialAlgebra a;
    a.type = type;
    a.m = s.m;
    a.lo = s.lo;
    for (int k = 0; k < s.m; ++k) {
        a.axes.push_back(static_cast<int>(a.labels.size()));
        a.labels.push_back("a" + std::to_string(s.lo + k));
    }
    for (const auto& o : s.odd) a.labels.push_back(o);
    std::size_t d = a.dim();
    a.prod.assign(d, std::vector<std::optional<Vec>>(d));
    a.form_tab.assign(d, std::vector<std::optional<Rat>>(d));

    auto group = symmetry_group(a);
    auto vec_of = [&](const Rule& r) {
        Vec v(d);
        for (const auto& [c, l] : r.rhs) v[a.index_of(l)] += c;
        return v;
    };
    // axes are idempotents of length 1
    for (int k = 0; k < a.m; ++k) {
        int i = a.axes[k];
        set_prod(a, i, i, a.basis(i));
        set_form(a, i, i, 1);
    }
    for (const auto& r : s.prods) {
        int x = a.index_of(r.x), y = a.index_of(r.y);
        Vec v = vec_of(r);
        for (const auto& g : group) {
            Vec w(d);
            for (std::size_t k = 0; k < d; ++k) w[g[k]] = v[k];
            set_prod(a, g[x], g[y], w);
        }
    }
    for (const auto& f : s.forms) {
        int x = a.index_of(f.x), y = a.index_of(f.y);
        for (const auto& g : group) set_form(a, g[x], g[y], f.value);
    }
    complete_form_by_frobenius(a);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            if (!a.prod[i][j]) a.holes.push_back("product " + a.labels[i] + "*" + a.labels[j]);
            if (!a.form_tab[i][j]) a.holes.push_back("pairing " + a.labels[i] + "," + a.labels[j]);
        }
    return a;
}

namespace {

struct Eigen {
    std::vector<Vec> vecs[4];
};

Eigen eigenspaces(const AxialAlgebra& a, int b) {
    RatMatrix ad = a.adjoint(b);
    Eigen e;
    for (int l = 0; l < 4; ++l) {
        RatMatrix m = ad;
        for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) -= kEigen[l];
        e.vecs[l] = nullspace(m);
    }
    return e;
}

RatMatrix columns(const std::vector<Vec>& cols) {
    RatMatrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    return m;
}

// basis map predicted for the Miyamoto involution of a_k: a_i -> a_{2k-i}
std::vector<int> reflection(const AxialAlgebra& a, int k) {
    std::vector<int> p(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) p[i] = static_cast<int>(i);
    for (int j = 0; j < a.m; ++j) p[a.axes[j]] = a.axis(2 * k - (a.lo + j));
    return p;
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return frac(num(rng), den(rng));
}

}  // namespace

AxiomReport verify_axioms(const AxialAlgebra& a, int norton_samples) {
    AxiomReport r;
    r.type = a.type;
    std::size_t d = a.dim();
    r.complete = a.holes.empty();
    if (!r.complete) {
        for (const auto& h : a.holes) r.failures.push_back("incomplete: " + h);
        return r;
    }
    r.commutative = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (*a.prod[i][j] != *a.prod[j][i] || *a.form_tab[i][j] != *a.form_tab[j][i]) r.commutative = false;
    if (!r.commutative) r.failures.push_back("not commutative or form not symmetric");

    r.frobenius = true;
    for (std::size_t x = 0; x < d && r.frobenius; ++x)
        for (std::size_t y = 0; y < d && r.frobenius; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vec bx = a.basis(x), by = a.basis(y), bz = a.basis(z);
                if (a.form(a.mul(bx, by), bz) != a.form(bx, a.mul(by, bz))) {
                    r.frobenius = false;
                    r.failures.push_back("Frobenius fails at (" + a.labels[x] + "," + a.labels[y] + "," + a.labels[z] + ")");
                    break;
                }
            }

    r.idempotent_axes = r.unit_length = true;
    for (int ax : a.axes) {
        Vec b = a.basis(ax);
        if (a.mul(b, b) != b) r.idempotent_axes = false;
        if (a.form(b, b) != 1) r.unit_length = false;
    }
    if (!r.idempotent_axes) r.failures.push_back("axis not idempotent");
    if (!r.unit_length) r.failures.push_back("axis length not 1");

    r.positive_definite = true;
    for (const auto& mnr : leading_minors(a.gram()))
        if (mnr <= 0) r.positive_definite = false;
    if (!r.positive_definite) r.failures.push_back("Gram matrix not positive definite");

    std::vector<RatMatrix> tau;
    for (int k = 0; k < a.m; ++k) {
        AxisReport ar;
        int ax = a.axes[k];
        ar.axis = a.labels[ax];
        Eigen e = eigenspaces(a, ax);
        std::vector<Vec> all;
        std::vector<int> which;
        for (int l = 0; l < 4; ++l) {
            ar.dims[l] = static_cast<int>(e.vecs[l].size());
            for (const auto& v : e.vecs[l]) {
                all.push_back(v);
                which.push_back(l);
            }
        }
        ar.semisimple = all.size() == d;
        ar.primitive = ar.dims[0] == 1;
        if (!ar.semisimple) ar.witness = "eigenspaces span " + std::to_string(all.size()) + " of " + std::to_string(d);
        if (ar.semisimple) {
            RatMatrix E = columns(all);
            auto Einv = inverse(E);
            ar.fusion = true;
            for (std::size_t i = 0; i < all.size() && ar.fusion; ++i)
                for (std::size_t j = i; j < all.size(); ++j) {
                    Vec c = Einv->apply(a.mul(all[i], all[j]));
                    for (std::size_t t = 0; t < c.size(); ++t)
                        if (c[t] != 0 && !fusion_allows(which[i], which[j], which[t])) {
                            ar.fusion = false;
                            ar.witness = "eigenvectors " + std::to_string(i) + "," + std::to_string(j) + " break the fusion law";
                        }
                    if (!ar.fusion) break;
                }
            RatMatrix D(d, d);
            for (std::size_t i = 0; i < d; ++i) D(i, i) = grading(which[i]);
            RatMatrix T = E * D * *Einv;
            tau.push_back(T);
            // automorphism, isometry, involution, predicted action on axes
            bool ok = T * T == RatMatrix::identity(d);
            for (std::size_t x = 0; x < d && ok; ++x)
                for (std::size_t y = 0; y < d && ok; ++y) {
                    Vec bx = a.basis(x), by = a.basis(y);
                    Vec tx = T.apply(bx), ty = T.apply(by);
                    if (T.apply(a.mul(bx, by)) != a.mul(tx, ty) || a.form(tx, ty) != a.form(bx, by)) ok = false;
                }
            auto pred = reflection(a, a.lo + k);
            for (int j : a.axes)
                if (T.apply(a.basis(j)) != a.basis(pred[j])) ok = false;
            for (std::size_t o = a.m; o < d; ++o) {
                Vec bo = a.basis(o), to = T.apply(bo);
                Vec neg = bo;
                for (auto& x : neg) x = -x;
                if (to == bo) ar.odd_sign = ar.odd_sign == -1 ? 2 : 1;
                else if (to == neg) ar.odd_sign = ar.odd_sign == 1 ? 2 : -1;
                else ok = false;
            }
            ar.miyamoto = ok;
            if (!ok && ar.witness.empty()) ar.witness = "Miyamoto map is not the expected automorphism";
        }
        if (!ar.semisimple || !ar.primitive || !ar.fusion || !ar.miyamoto)
            r.failures.push_back(a.type + " axis " + ar.axis + ": " + ar.witness);
        r.per_axis.push_back(ar);
    }

    // tau_0 tau_1 acts as a_i -> a_{i+2}
    if (tau.size() >= 2 || a.m == 1) {
        RatMatrix rot = a.m == 1 ? RatMatrix::identity(d) : tau[1 - a.lo == 0 ? 0 : (1 - a.lo) % a.m] * tau[(0 - a.lo) % a.m];
        r.rotation = true;
        for (int j = 0; j < a.m; ++j) {
            int i = a.lo + j;
            if (rot.apply(a.basis(a.axis(i))) != a.basis(a.axis(i + 2))) r.rotation = false;
        }
        RatMatrix p = rot;
        int order = 1;
        while (!(p == RatMatrix::identity(d)) && order <= 12) {
            p = p * rot;
            ++order;
        }
        r.rotation_order = order;
        if (!r.rotation) r.failures.push_back("tau_0 tau_1 is not the rotation");
    } else {
        r.rotation = a.m == 2;  // 2A/2B: a single orbit pair, checked through the axis maps
        r.rotation_order = 1;
    }

    std::mt19937 rng(0x5eed + static_cast<unsigned>(d));
    r.norton = true;
    for (int s = 0; s < norton_samples; ++s) {
        Vec u(d), v(d);
        for (auto& x : u) x = random_rat(rng);
        for (auto& x : v) x = random_rat(rng);
        Vec uv = a.mul(u, v);
        if (a.form(a.mul(u, u), a.mul(v, v)) < a.form(uv, uv)) {
            r.norton = false;
            r.failures.push_back("Norton inequality fails on sample " + std::to_string(s));
            break;
        }
        ++r.norton_samples;
    }
    return r;
}

Vec sigma_vector() {
    AxialAlgebra a = build("3A");
    Vec a0 = a.basis(a.axis(0)), a1 = a.basis(a.axis(1));
    Vec s = a.mul(a0, a1);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= frac(1, 32) * (a0[i] + a1[i]);
    return s;
}

std::vector<Term> terms(const AxialAlgebra& a, const Vec& v) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.push_back({v[i], a.labels[i]});
    return out;
}

std::vector<Term> expand_axis_product(const std::string& type, int i, int j) {
    static std::map<std::string, AxialAlgebra> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(type);
    if (it == cache.end()) it = cache.emplace(type, build(type)).first;
    const auto& a = it->second;
    return terms(a, a.mul(a.basis(a.axis(i)), a.basis(a.axis(j))));
}

}  // namespace axc::ns
