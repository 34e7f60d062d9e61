// SPDX-License-Identifier: MIT
#include "axc/spechtmod.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "axc/data.hpp"
#include "axc/invsets.hpp"

namespace axc::specht {

bool is_partition(const Shape& l) {
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] <= 0 || (i && l[i] > l[i - 1])) return false;
    return true;
}

Int dim_specht(const Shape& l) {
    if (!is_partition(l)) throw std::invalid_argument("not a partition");
    auto c = data::conjugate(l);
    int n = std::accumulate(l.begin(), l.end(), 0);
    Int num = 1, hooks = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (int j = 0; j < l[i]; ++j) hooks *= (l[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
    return num / hooks;
}

Shape Tableau::shape() const {
    Shape s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

int Tableau::n() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

std::string Tableau::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += " / ";
        for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? " " : "") + std::to_string(rows[i][j]);
    }
    return s;
}

Tableau Tableau::from_json(const nlohmann::json& rows, int n) {
    Tableau t;
    auto range = [&](const std::string& s, bool& singletons) {
        std::string body = s;
        singletons = !body.empty() && body.back() == '/';
        if (singletons) body.pop_back();
        auto dots = body.find("..");
        int a = std::stoi(body.substr(0, dots));
        std::string hi = body.substr(dots + 2);
        int b = hi == "n" ? n : std::stoi(hi);
        std::vector<int> out;
        for (int x = a; x <= b; ++x) out.push_back(x);
        return out;
    };
    for (const auto& r : rows) {
        std::vector<int> row;
        std::vector<std::vector<int>> extra;
        for (const auto& e : r) {
            if (e.is_number_integer()) {
                row.push_back(e.get<int>());
                continue;
            }
            bool singles = false;
            auto pts = range(e.get<std::string>(), singles);
            if (singles)
                for (int x : pts) extra.push_back({x});
            else
                row.insert(row.end(), pts.begin(), pts.end());
        }
        if (!row.empty()) t.rows.push_back(row);
        for (auto& x : extra) t.rows.push_back(x);
    }
    std::vector<int> all;
    for (const auto& r : t.rows) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
        if (all[i] != i + 1 || static_cast<int>(all.size()) != n)
            throw std::invalid_argument("tableau entries are not 1.." + std::to_string(n));
    if (!is_partition(t.shape())) throw std::invalid_argument("tableau rows are not a partition shape");
    return t;
}

TabloidKey tabloid_key(const Tableau& t) {
    TabloidKey k = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int x : t.rows[r]) k |= static_cast<TabloidKey>(r) << (4 * (x - 1));
    return k;
}

int row_of(TabloidKey k, int point) { return static_cast<int>((k >> (4 * (point - 1))) & 0xF); }

TabloidKey act(TabloidKey k, const Perm& g) {
    TabloidKey out = 0;
    for (int p = 0; p < g.degree(); ++p) out |= ((k >> (4 * p)) & 0xF) << (4 * g[p]);
    return out;
}

std::string bar(TabloidKey k, int n, int nrows) {
    std::string s;
    for (int r = 1; r < nrows; ++r) {
        if (r > 1) s += "|";
        bool first = true;
        for (int p = 1; p <= n; ++p)
            if (row_of(k, p) == r) {
                s += (first ? "" : ",") + std::to_string(p);
                first = false;
            }
    }
    return s;
}

TabloidKey parse_bar(const std::string& s, const Shape& shape) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<int> row(n + 1, 0);
    int r = 1;
    std::string num;
    auto flush = [&]() {
        if (num.empty()) return;
        int p = std::stoi(num);
        if (p < 1 || p > n) throw std::invalid_argument("point out of range in " + s);
        row[p] = r;
        num.clear();
    };
    for (char c : s) {
        if (c == '|') {
            flush();
            ++r;
        } else if (c == ',') {
            flush();
        } else {
            num += c;
        }
    }
    flush();
    TabloidKey k = 0;
    for (int p = 1; p <= n; ++p) k |= static_cast<TabloidKey>(row[p]) << (4 * (p - 1));
    return k;
}

namespace {

using Acc = std::unordered_map<TabloidKey, long long>;

void normalize(SpechtVec& v, const Acc& acc) {
    v.terms.clear();
    for (const auto& [k, c] : acc)
        if (c != 0) v.terms.emplace_back(k, c);
    std::sort(v.terms.begin(), v.terms.end());
}

}  // namespace

SpechtVec SpechtVec::act(const Perm& g) const {
    SpechtVec out{shape, n, twisted, {}};
    long long s = twisted ? g.sign() : 1;
    out.terms.reserve(terms.size());
    for (const auto& [k, c] : terms) out.terms.emplace_back(specht::act(k, g), s * c);
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

Int SpechtVec::kappa(const SpechtVec& o) const {
    __int128 acc = 0;
    std::size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        if (terms[i].first < o.terms[j].first) ++i;
        else if (o.terms[j].first < terms[i].first) ++j;
        else acc += static_cast<__int128>(terms[i++].second) * o.terms[j++].second;
    }
    bool neg = acc < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(acc) : static_cast<unsigned __int128>(acc);
    Int r = 0;
    Int base = 1;
    while (u) {
        r += base * static_cast<unsigned long>(u & 0xFFFFFFFFu);
        base *= Int("4294967296");
        u >>= 32;
    }
    return neg ? Int(-r) : r;
}

long long SpechtVec::coef(TabloidKey k) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), std::pair<TabloidKey, long long>{k, LLONG_MIN});
    return it != terms.end() && it->first == k ? it->second : 0;
}

SpechtVec& SpechtVec::operator+=(const SpechtVec& o) {
    Acc acc;
    for (const auto& [k, c] : terms) acc[k] += c;
    for (const auto& [k, c] : o.terms) acc[k] += c;
    normalize(*this, acc);
    return *this;
}

SpechtVec SpechtVec::scaled(long long c) const {
    SpechtVec out = *this;
    if (c == 0) out.terms.clear();
    for (auto& t : out.terms) t.second *= c;
    return out;
}

std::string SpechtVec::str() const {
    std::string s;
    for (const auto& [k, c] : terms) {
        if (!s.empty()) s += " ";
        s += (c < 0 ? "-" : "+");
        if (std::llabs(c) != 1) s += std::to_string(std::llabs(c)) + "*";
        s += bar(k, n, static_cast<int>(shape.size()));
    }
    return s.empty() ? "0" : s;
}

SparseVec SpechtVec::sparse() const {
    SparseVec v(1L << 48);
    for (const auto& [k, c] : terms) v.add(static_cast<long>(k), Rat(static_cast<long>(c)));
    return v;
}

SpechtVec polytabloid(const Tableau& t, bool twisted) {
    int n = t.n();
    auto shape = t.shape();
    auto cols = data::conjugate(shape);
    // column stabilizer as a product of column symmetric groups, expanded term by term
    std::vector<std::pair<std::vector<int>, int>> perms{{{}, 1}};  // image lists over points, sign
    std::vector<int> id(n + 1);
    std::iota(id.begin(), id.end(), 0);
    perms[0].first = id;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> col;
        for (int r = 0; r < cols[c]; ++r) col.push_back(t.rows[r][c]);
        if (col.size() < 2) continue;
        std::vector<int> order(col.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> next;
        do {
            // parity of the arrangement
            int inv = 0;
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = a + 1; b < order.size(); ++b) inv += order[a] > order[b];
            for (const auto& [img, sg] : perms) {
                auto im = img;
                for (std::size_t a = 0; a < col.size(); ++a) im[col[a]] = col[order[a]];
                next.emplace_back(std::move(im), inv % 2 ? -sg : sg);
            }
        } while (std::next_permutation(order.begin(), order.end()));
        perms = std::move(next);
    }
    TabloidKey base = tabloid_key(t);
    Acc acc;
    for (const auto& [img, sg] : perms) {
        TabloidKey k = 0;
        for (int p = 1; p <= n; ++p) k |= static_cast<TabloidKey>(row_of(base, p)) << (4 * (img[p] - 1));
        acc[k] += sg;
    }
    SpechtVec v{shape, n, twisted, {}};
    normalize(v, acc);
    return v;
}

SpechtVec orbit_sum(const SpechtVec& v, const std::vector<std::vector<Perm>>& chain) {
    // group elements are t_k ... t_1, so the deepest transversal acts first
    Acc cur;
    for (const auto& [k, c] : v.terms) cur[k] += c;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        Acc next;
        next.reserve(cur.size() * 2);
        for (const auto& t : *it) {
            long long s = v.twisted ? t.sign() : 1;
            for (const auto& [k, c] : cur) next[act(k, t)] += s * c;
        }
        cur = std::move(next);
    }
    SpechtVec out{v.shape, v.n, v.twisted, {}};
    normalize(out, cur);
    return out;
}

SpechtVec invariant_vector(const Tableau& seed, bool twisted, const GenSet& group) {
    return orbit_sum(polytabloid(seed, twisted), transversal_chain(group));
}

Seed auto_seed(const Shape& lambda, const GenSet& group, unsigned rng_seed, int max_attempts) {
    Shape conj = data::conjugate(lambda);
    // column stabilizer of a tableau of shape mu has order prod (mu'_j)!
    auto col_order = [](const Shape& mu) {
        Int o = 1;
        for (int c : data::conjugate(mu))
            for (int k = 2; k <= c; ++k) o *= k;
        return o;
    };
    bool twisted = col_order(conj) < col_order(lambda);
    Shape use = twisted ? conj : lambda;
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::mt19937 rng(rng_seed);
    auto chain = transversal_chain(group);
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 1);
    for (int a = 1; a <= max_attempts; ++a) {
        Tableau t;
        std::size_t pos = 0;
        for (int len : use) {
            t.rows.emplace_back(pts.begin() + pos, pts.begin() + pos + len);
            pos += len;
        }
        if (!orbit_sum(polytabloid(t, twisted), chain).is_zero()) return {t, twisted, a};
        std::shuffle(pts.begin(), pts.end(), rng);
    }
    throw std::runtime_error("no seed with a nonzero invariant vector for " + data::partition_str(lambda));
}

std::size_t polytabloid_span_rank(const Shape& lambda) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n > 7) throw std::invalid_argument("span check limited to n <= 7");
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 1);
    std::vector<SparseVec> vs;
    do {
        Tableau t;
        std::size_t pos = 0;
        for (int len : lambda) {
            t.rows.emplace_back(pts.begin() + pos, pts.begin() + pos + len);
            pos += len;
        }
        vs.push_back(polytabloid(t, false).sparse());
    } while (std::next_permutation(pts.begin(), pts.end()));
    return rank(vs);
}

SpechtVec w_n(int n) {
    const auto& s9 = data::get("section9.json");
    Tableau t = Tableau::from_json(s9.at("seed").at("rows"), n);
    bool tw = s9.at("seed").at("twisted").get<bool>();
    GenSet n6 = normalizer_e1_gens(6);
    GenSet g;
    g.n = n;
    g.label = "N_S6(<e1>)";
    for (const auto& h : n6.gens) g.gens.push_back(h.extend(n));
    SpechtVec w7 = invariant_vector(t, tw, g);
    SpechtVec w = w7;
    for (int i = 8; i <= n; ++i) w += w7.act(Perm::transposition(n, 7, i));
    return w;
}

DipendentiReport dipendenti_suite(int n) {
    const auto& s9 = data::get("section9.json");
    DipendentiReport r;
    r.n = n;
    auto ns = std::to_string(n);
    const auto& list = s9.at("lists").at(ns);
    r.listed = list.size();
    r.claimed = s9.at("list_claimed_sizes").at(ns).get<std::size_t>();
    Shape lam{6};
    for (int i = 0; i < n - 6; ++i) lam.push_back(1);
    r.dim = dim_specht(lam);
    SpechtVec w = w_n(n);
    Perm e1 = inv::base_point('t', n);
    std::vector<int> allowed;
    for (const auto& x : s9.at("list_orbitals").at(ns)) allowed.push_back(x.get<int>());
    std::vector<SparseVec> vecs;
    for (const auto& s : list) {
        Perm g = Perm::parse(s.get<std::string>(), n);
        int orb = inv::classify(n, 't', e1, 't', conj(e1, g));
        if (std::find(allowed.begin(), allowed.end(), orb) == allowed.end())
            r.failures.push_back("n=" + ns + ": " + g.str() + " gives orbital " + std::to_string(orb) + ", outside the stated families");
        vecs.push_back(w.act(g).sparse());
    }
    r.rank = rank(vecs);
    // w_n^g depends only on <e_1>^g, so the generating set is indexed by points of the orbitals
    const auto& P = inv::suborbits(n, "tt");
    const auto& X = inv::class_set(n, 't');
    std::vector<SparseVec> fam;
    for (int id : allowed)
        for (int idx : P.cells.at(id - 1)) fam.push_back(w.act(*conjugator(e1, X.points[idx])).sparse());
    r.family_size = fam.size();
    r.family_rank = rank(fam);
    r.lines.push_back("n=" + ns + ": stated orbitals give " + std::to_string(r.family_size) + " vectors of rank " +
                      std::to_string(r.family_rank));
    if (Int(static_cast<unsigned long>(r.family_rank)) != r.dim)
        r.failures.push_back("n=" + ns + ": the stated orbitals span only " + std::to_string(r.family_rank));
    r.lines.push_back("n=" + ns + ": " + std::to_string(r.listed) + " listed (" + std::to_string(r.claimed) + " claimed), rank " +
                      std::to_string(r.rank) + ", dim " + r.dim.get_str());
    if (r.listed != r.claimed) r.failures.push_back("n=" + ns + ": the list has " + std::to_string(r.listed) + " elements, not " + std::to_string(r.claimed));
    if (Int(static_cast<unsigned long>(r.rank)) != r.dim) r.failures.push_back("n=" + ns + ": rank " + std::to_string(r.rank) + " < dim " + r.dim.get_str());
    if (n == 8) {
        for (const auto& rel : s9.at("relations_8")) {
            Perm lhs = Perm::parse(rel.at("lhs").get<std::string>(), n);
            SpechtVec diff = w.act(lhs);
            for (const auto& term : rel.at("rhs")) {
                long long c = std::stoll(term[0].get<std::string>());
                diff += w.act(Perm::parse(term[1].get<std::string>(), n)).scaled(-c);
            }
            std::string name = "w^" + lhs.str();
            if (diff.is_zero()) r.lines.push_back("relation for " + name + " holds");
            else r.failures.push_back("relation for " + name + " fails; residual " + diff.str());
        }
        // printed w_8, in bar notation over (6,1,1)
        SpechtVec printed{w.shape, n, true, {}};
        Acc acc;
        for (const auto& term : s9.at("w8_printed"))
            acc[parse_bar(term[1].get<std::string>(), w.shape)] += std::stoll(term[0].get<std::string>());
        normalize(printed, acc);
        Int ww = w.kappa(w), wp = w.kappa(printed), pp = printed.kappa(printed);
        bool parallel = wp * wp == ww * pp && wp != 0;
        r.lines.push_back(std::string("printed w_8 is ") + (parallel ? "proportional to" : "not proportional to") +
                          " the computed one; computed w_8 = " + w.str());
        if (!parallel) r.failures.push_back("n=8: printed w_8 differs from the orbit sum");
    }
    return r;
}

}  // namespace axc::specht
