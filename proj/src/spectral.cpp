// SPDX-License-Identifier: MIT
#include "axc/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "axc/data.hpp"

namespace axc::spectral {

namespace {

using data::json;

const json& modules() { return data::get("modules.json"); }

std::string kind_key(char kind) { return std::string(2, kind); }

std::vector<Rat> valencies_of(const inv::Partition& P) {
    std::vector<Rat> v;
    for (int id : P.ids) v.push_back(Rat(static_cast<long>(P.cells[id - 1].size())));
    return v;
}

// configured seed for kind t, with per-degree overrides
std::optional<specht::Seed> configured_seed(char kind, int n, const std::string& label) {
    if (kind != 't') return std::nullopt;
    const auto& tt = modules().at("tt");
    const json* s = nullptr;
    auto ns = std::to_string(n);
    if (tt.contains("seed_overrides") && tt["seed_overrides"].contains(ns) && tt["seed_overrides"][ns].contains(label))
        s = &tt["seed_overrides"][ns][label];
    else if (tt.at("seeds").contains(label))
        s = &tt["seeds"][label];
    if (!s) return std::nullopt;
    specht::Seed seed;
    seed.tableau = specht::Tableau::from_json(s->at("rows"), n);
    seed.twisted = s->at("twisted").get<bool>();
    seed.attempts = 0;
    return seed;
}

// lambda of the module spanned by a seed: the tableau shape, conjugated when twisted
Shape module_shape(const specht::Seed& s) {
    return s.twisted ? data::conjugate(s.tableau.shape()) : s.tableau.shape();
}

bool proportional(const specht::SpechtVec& a, const specht::SpechtVec& b) {
    if (a.is_zero() || b.is_zero()) return true;
    Int ab = a.kappa(b), aa = a.kappa(a), bb = b.kappa(b);
    return ab * ab == aa * bb;
}

}  // namespace

Rat EigenRow::at(int id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return values[i];
    throw std::out_of_range("orbital " + std::to_string(id) + " not in row " + label);
}

std::string pair_of(char kind) {
    if (kind != 'b' && kind != 's' && kind != 't') throw std::invalid_argument(std::string("no action for kind ") + kind);
    return kind_key(kind);
}

long class_size(char kind, int n) { return inv::class_set(n, kind).size(); }

EigenRow first_eigenmatrix_row(char kind, int n, const std::string& label) {
    const auto& P = inv::suborbits(n, pair_of(kind));
    EigenRow r;
    r.kind = kind;
    r.n = n;
    r.label = label;
    r.lambda = data::partition(label, n);
    if (!specht::is_partition(r.lambda) || std::accumulate(r.lambda.begin(), r.lambda.end(), 0) != n)
        throw std::invalid_argument(label + " is not a partition of " + std::to_string(n));
    r.dim = specht::dim_specht(r.lambda);
    r.ids = P.ids;
    if (r.lambda.size() == 1) {
        r.values = valencies_of(P);
        r.source = "valencies";
        return r;
    }
    GenSet H = inv::stabilizer(kind, n);
    auto seed = configured_seed(kind, n, label);
    bool configured = seed.has_value();
    if (!seed) seed = specht::auto_seed(r.lambda, H);
    if (module_shape(*seed) != r.lambda)
        throw std::invalid_argument("seed for " + label + " has shape " + data::partition_str(seed->tableau.shape()));
    auto chain = transversal_chain(H);
    specht::SpechtVec w = specht::orbit_sum(specht::polytabloid(seed->tableau, seed->twisted), chain);
    if (w.is_zero()) throw std::runtime_error("invariant vector vanishes for " + label + " from " + seed->tableau.str());
    if (!configured) {
        // two more fillings must give multiples of w when the fixed space is a line
        std::mt19937 rng(n * 7919u + static_cast<unsigned>(label.size()));
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 1);
        for (int k = 0; k < 2; ++k) {
            std::shuffle(pts.begin(), pts.end(), rng);
            specht::Tableau t;
            std::size_t pos = 0;
            for (int len : seed->tableau.shape()) {
                t.rows.emplace_back(pts.begin() + pos, pts.begin() + pos + len);
                pos += len;
            }
            if (!proportional(w, specht::orbit_sum(specht::polytabloid(t, seed->twisted), chain)))
                throw std::runtime_error(label + " is not multiplicity-free in the action on X_" + std::string(1, kind));
        }
    }
    Int ww = w.kappa(w);
    Perm base = inv::base_point(kind, n);
    for (int id : P.ids) {
        auto g = conjugator(base, P.reps[id - 1]);
        if (!g) throw std::logic_error("no conjugator to representative " + P.reps[id - 1].str());
        Rat v(w.kappa(w.act(*g)) * static_cast<long>(P.cells[id - 1].size()), ww);
        v.canonicalize();
        r.values.push_back(v);
    }
    r.source = (seed->twisted ? "twisted seed " : "seed ") + seed->tableau.str();
    return r;
}

std::vector<std::string> constituents(char kind, int n) {
    std::vector<std::string> out;
    if (kind == 's') {
        for (const auto& c : modules().at("ss").at("constituents")) out.push_back(c.get<std::string>());
    } else if (kind == 'b') {
        if (n != 12) throw std::invalid_argument("the decomposition of M_b is configured at degree 12");
        for (const auto& c : modules().at("bb").at("constituents")) out.push_back(c[0].get<std::string>());
    } else {
        for (const auto& c : modules().at("tt").at("minus_constituents")) out.push_back(c.get<std::string>());
    }
    return out;
}

Rat orthogonality(const EigenRow& a, const EigenRow& b) {
    const auto& P = inv::suborbits(a.n, pair_of(a.kind));
    Rat s = 0;
    for (std::size_t i = 0; i < a.ids.size(); ++i) s += a.values[i] * b.at(a.ids[i]) / static_cast<long>(P.cells[a.ids[i] - 1].size());
    s.canonicalize();
    return s;
}

Rat f_lambda(const EigenRow& r) {
    Rat s = 0;
    for (std::size_t i = 0; i < r.ids.size(); ++i) s += inv::gamma(pair_of(r.kind), r.ids[i]) * r.values[i];
    s.canonicalize();
    return s;
}

Mult2 eigenmatrix_row_mult2(int n) {
    const auto& tt = modules().at("tt");
    const auto& P = inv::suborbits(n, "tt");
    std::string label = tt.at("mult2").get<std::string>();
    auto beta = inv::beta_pairing(n);
    std::vector<int> unk;
    for (const auto& u : tt.at("unknown_orbitals")) unk.push_back(u.get<int>());
    auto k = [&](int id) { return Rat(static_cast<long>(P.cells.at(id - 1).size())); };

    std::vector<EigenRow> comp;
    for (const auto& c : tt.at("companions")) comp.push_back(row('t', n, c.get<std::string>()));
    std::size_t m = unk.size();
    RatMatrix A(comp.size(), m);
    std::vector<Rat> b(comp.size());
    for (std::size_t r = 0; r < comp.size(); ++r) {
        const auto& c = comp[r];
        b[r] = -(c.at(1) / k(1) - c.at(beta.at(1)) / k(beta.at(1)));
        for (std::size_t j = 0; j < m; ++j) {
            int u = unk[j], v = beta.at(u);
            A(r, j) = c.at(u) / k(u) - c.at(v) / k(v);
        }
    }
    std::vector<Rat> q(m);
    for (std::size_t j = 0; j < m; ++j) q[j] = 1 / k(unk[j]) + 1 / k(beta.at(unk[j]));
    Shape lam = data::partition(label, n);
    Int dim = specht::dim_specht(lam);
    Rat qrhs = Rat(class_size('t', n)) / Rat(dim) - 1 / k(1) - 1 / k(beta.at(1));
    qrhs.canonicalize();

    Mult2 out;
    auto build = [&](const std::vector<Rat>& x) {
        EigenRow r;
        r.kind = 't';
        r.n = n;
        r.label = label;
        r.lambda = lam;
        r.dim = dim;
        r.ids = P.ids;
        r.source = "mult2";
        std::map<int, Rat> val{{1, 1}, {beta.at(1), -1}};
        for (std::size_t j = 0; j < m; ++j) {
            val[unk[j]] = x[j];
            val[beta.at(unk[j])] = -x[j];
        }
        for (int id : P.ids) r.values.push_back(val.count(id) ? val[id] : Rat(0));
        return r;
    };
    if (rank(A) == m) {
        auto x = solve(A, b);
        if (!x) throw std::runtime_error("mult-2 system at n=" + std::to_string(n) + " is inconsistent");
        Rat lhs = 0;
        for (std::size_t j = 0; j < m; ++j) lhs += q[j] * (*x)[j] * (*x)[j];
        if (lhs != qrhs) throw std::runtime_error("mult-2 linear solution violates the norm equation at n=" + std::to_string(n));
        out.roots.push_back(*x);
        out.note = "linear part determines the row";
    } else {
        auto res = solve_linear_quadratic(A, b, q, qrhs);
        if (!res.error.empty()) throw std::runtime_error("mult-2 system at n=" + std::to_string(n) + ": " + res.error);
        if (res.solutions.empty())
            throw std::runtime_error(std::string("mult-2 system has no rational solution") + (res.irrational ? " (irrational roots)" : ""));
        out.roots = res.solutions;
    }
    int chosen = -1, count = 0;
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        bool ok = f_lambda(build(out.roots[i])) >= 0;
        out.admissible.push_back(ok);
        if (ok) {
            ++count;
            if (chosen < 0) chosen = static_cast<int>(i);
        }
    }
    if (count == 0) throw std::runtime_error("every root of the mult-2 system gives a negative form value");
    if (count > 1) {
        // both roots admissible: keep the one with the larger f value but say so
        Rat best = f_lambda(build(out.roots[chosen]));
        for (std::size_t i = 0; i < out.roots.size(); ++i)
            if (out.admissible[i] && f_lambda(build(out.roots[i])) > best) chosen = static_cast<int>(i);
        out.note = "ambiguous: " + std::to_string(count) + " roots give nonnegative form values";
    } else if (out.note.empty()) {
        out.note = std::to_string(out.roots.size()) + " rational root(s), one admissible";
    }
    out.x = out.roots[chosen];
    out.row = build(out.x);
    return out;
}

const EigenRow& row(char kind, int n, const std::string& label_in, int copy) {
    // on X_t a plain partition names the configured constituent with that shape at degree n
    std::string label = label_in;
    if (kind == 't' && label.find('n') == std::string::npos)
        for (const auto& c : constituents('t', n))
            if (data::partition(c, n) == data::partition(label, n)) label = c;
    static std::mutex mu;
    static std::map<std::tuple<char, int, std::string, int>, EigenRow> cache;
    auto key = std::make_tuple(kind, n, label, copy);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EigenRow r;
    if (kind == 'b' && modules().at("bb").at("mult2_diagonal").contains(label)) {
        if (n != 12) throw std::invalid_argument("configured diagonal rows are at degree 12");
        const auto& rows = modules()["bb"]["mult2_diagonal"][label];
        if (copy < 1 || copy > static_cast<int>(rows.size())) throw std::out_of_range("copy index for " + label);
        r.kind = 'b';
        r.n = n;
        r.label = label;
        r.lambda = data::partition(label, n);
        r.dim = specht::dim_specht(r.lambda);
        r.copy = copy;
        r.ids = inv::suborbits(n, "bb").ids;
        r.values = data::rats(rows[copy - 1]);
        r.source = "configured";
    } else if (kind == 't' && label == modules().at("tt").at("mult2").get<std::string>()) {
        r = eigenmatrix_row_mult2(n).row;
    } else {
        if (copy != 1) throw std::invalid_argument(label + " has a single copy");
        r = first_eigenmatrix_row(kind, n, label);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(r)).first->second;
}

std::string str(Parity p) { return p == Parity::plus ? "plus" : p == Parity::minus ? "minus" : "neither"; }

Parity beta_parity(const EigenRow& r) {
    if (r.kind != 't') throw std::invalid_argument("beta parity is defined on X_t");
    auto beta = inv::beta_pairing(r.n);
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < r.ids.size(); ++i) {
        int j = r.ids[i];
        int jb = beta.count(j) ? beta.at(j) : j;
        Rat other = r.at(jb);
        if (r.values[i] != other) plus = false;
        if (r.values[i] != -other) minus = false;
    }
    return plus ? Parity::plus : minus ? Parity::minus : Parity::neither;
}

// --- orbit-sum vectors ---

const inv::Partition& OrbitSumVec::partition() const { return inv::suborbits(n, std::string{group, cls}); }

Rat OrbitSumVec::at(int id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return coords[i];
    return 0;
}

SparseVec OrbitSumVec::expand() const {
    const auto& P = partition();
    SparseVec v(class_size(cls, n));
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (coords[i] != 0)
            for (int idx : P.cells[ids[i] - 1]) v.add(idx, coords[i]);
    return v;
}

OrbitSumVec base_vector(char kind, int n) {
    OrbitSumVec v{n, kind, kind, inv::suborbits(n, pair_of(kind)).ids, {}};
    v.coords.assign(v.ids.size(), Rat(0));
    v.coords[0] = 1;
    return v;
}

OrbitSumVec cell_vector(int n, char group, char cls, int id) {
    OrbitSumVec v{n, group, cls, inv::suborbits(n, std::string{group, cls}).ids, {}};
    v.coords.assign(v.ids.size(), Rat(0));
    auto it = std::find(v.ids.begin(), v.ids.end(), id);
    if (it == v.ids.end()) throw std::out_of_range("no orbit " + std::to_string(id));
    v.coords[it - v.ids.begin()] = 1;
    return v;
}

OrbitSumVec ones_vector(int n, char group, char cls) {
    OrbitSumVec v{n, group, cls, inv::suborbits(n, std::string{group, cls}).ids, {}};
    v.coords.assign(v.ids.size(), Rat(1));
    return v;
}

OrbitSumVec normalized(const OrbitSumVec& v) {
    OrbitSumVec out = v;
    for (const auto& c : v.coords)
        if (c != 0) {
            for (auto& x : out.coords) {
                x /= c;
                x.canonicalize();
            }
            break;
        }
    return out;
}

OrbitSumVec project(const OrbitSumVec& u, const EigenRow& r) {
    if (r.kind != u.cls || r.n != u.n) throw std::invalid_argument("row and vector live in different modules");
    const auto& X = inv::class_set(u.n, u.cls);
    const auto& Pc = inv::suborbits(u.n, pair_of(u.cls));
    const auto& Pu = u.partition();
    // coefficient of z in the projection of v, by the orbital of (v, z)
    std::map<int, Rat> c;
    for (std::size_t j = 0; j < r.ids.size(); ++j) {
        int id = r.ids[j];
        Rat v = Rat(r.dim) * r.values[j] / (Rat(X.size()) * static_cast<long>(Pc.cells[id - 1].size()));
        v.canonicalize();
        c[id] = v;
    }
    OrbitSumVec out{u.n, u.group, u.cls, Pu.ids, {}};
    for (int id : Pu.ids) {
        const auto& cell = Pu.cells[id - 1];
        Rat s = 0;
        if (!cell.empty()) {
            const Perm& z = X.points[cell.front()];
            for (std::size_t k = 0; k < u.ids.size(); ++k) {
                if (u.coords[k] == 0) continue;
                Rat inner = 0;
                for (int vi : Pu.cells[u.ids[k] - 1]) inner += c[inv::classify(u.n, u.cls, X.points[vi], u.cls, z)];
                s += u.coords[k] * inner;
            }
        }
        s.canonicalize();
        out.coords.push_back(s);
    }
    return out;
}

namespace {

// F(x,y)_ij for the stabilizer of the base of `group`
const RatMatrix& gram_blocks(int n, char group, char cx, char cy) {
    static std::mutex mu;
    static std::map<std::tuple<int, char, char, char>, RatMatrix> cache;
    auto key = std::make_tuple(n, group, cx, cy);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const auto& Px = inv::suborbits(n, std::string{group, cx});
    const auto& Py = inv::suborbits(n, std::string{group, cy});
    const auto& Xx = inv::class_set(n, cx);
    const auto& Xy = inv::class_set(n, cy);
    RatMatrix F(Px.ids.size(), Py.ids.size());
    for (std::size_t i = 0; i < Px.ids.size(); ++i) {
        const auto& ci = Px.cells[Px.ids[i] - 1];
        if (ci.empty()) continue;
        const Perm& z = Xx.points[ci.front()];
        for (std::size_t j = 0; j < Py.ids.size(); ++j) {
            std::map<int, long> hist;
            for (int w : Py.cells[Py.ids[j] - 1]) ++hist[inv::classify(n, cx, z, cy, Xy.points[w])];
            Rat s = 0;
            for (auto [id, cnt] : hist) s += inv::gamma(std::string{cx, cy}, id) * cnt;
            s.canonicalize();
            F(i, j) = s;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(F)).first->second;
}

}  // namespace

Rat restricted_gram(const OrbitSumVec& x, const OrbitSumVec& y) {
    if (x.n != y.n || x.group != y.group) throw std::invalid_argument("vectors are fixed by different stabilizers");
    const RatMatrix& F = gram_blocks(x.n, x.group, x.cls, y.cls);
    const auto& Px = x.partition();
    Rat s = 0;
    for (std::size_t i = 0; i < x.ids.size(); ++i) {
        if (x.coords[i] == 0) continue;
        Rat inner = 0;
        for (std::size_t j = 0; j < y.ids.size(); ++j) inner += F(i, j) * y.coords[j];
        s += x.coords[i] * static_cast<long>(Px.cells[x.ids[i] - 1].size()) * inner;
    }
    s.canonicalize();
    return s;
}

Rat gram_by_expansion(const OrbitSumVec& x, const OrbitSumVec& y) {
    const auto& Xx = inv::class_set(x.n, x.cls);
    const auto& Xy = inv::class_set(y.n, y.cls);
    auto ex = x.expand(), ey = y.expand();
    Rat s = 0;
    for (const auto& [i, a] : ex.entries())
        for (const auto& [j, b] : ey.entries()) s += a * b * inv::gamma_of(x.n, x.cls, Xx.points[i], y.cls, Xy.points[j]);
    s.canonicalize();
    return s;
}

PairTest pair_det_test(const OrbitSumVec& x, const OrbitSumVec& y) {
    PairTest t;
    t.gram = RatMatrix(2, 2);
    t.gram(0, 0) = restricted_gram(x, x);
    t.gram(0, 1) = restricted_gram(x, y);
    t.gram(1, 0) = restricted_gram(y, x);
    t.gram(1, 1) = restricted_gram(y, y);
    t.det = det(t.gram);
    t.radical = t.det == 0;
    return t;
}

inv::SelfCheck sigma_check(int n) {
    inv::SelfCheck sc;
    const auto& sig = data::get("classes.json").at("tt_sigma");
    const auto& P = inv::suborbits(n, "tt");
    Perm e1 = inv::base_point('t', n);
    for (int id : P.ids) {
        Perm g = Perm::parse(sig.at(id - 1).get<std::string>(), 12);
        if (g.support_max() > n) {
            sc.lines.push_back("sigma_" + std::to_string(id) + " moves points beyond " + std::to_string(n) + "; skipped");
            continue;
        }
        Perm gn = Perm::parse(sig.at(id - 1).get<std::string>(), n);
        int got = inv::classify(n, 't', e1, 't', conj(e1, gn));
        if (P.primary(got) != P.primary(id))
            sc.failures.push_back("n=" + std::to_string(n) + ": sigma_" + std::to_string(id) + " lands in orbital " + std::to_string(got));
    }
    sc.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(P.ids.size()) + " orbital representatives checked");
    return sc;
}

}  // namespace axc::spectral
