// SPDX-License-Identifier: MIT
#include "axc/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace axc {

Perm::Perm(int n) : n_(n) {
    if (n < 0 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
    img_.fill(0);
    for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Perm::Perm(int n, const std::vector<int>& images1) : Perm(n) {
    if (static_cast<int>(images1.size()) != n) throw std::invalid_argument("image list length");
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
        int y = images1[i] - 1;
        if (y < 0 || y >= n || hit[y]) throw std::invalid_argument("not a bijection");
        hit[y] = true;
        img_[i] = static_cast<std::uint8_t>(y);
    }
}

Perm Perm::cycle(int n, const std::vector<int>& pts) {
    Perm p(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        int a = pts[i] - 1;
        if (a < 0 || a >= n || used[a]) throw std::invalid_argument("bad cycle " + std::to_string(pts[i]));
        used[a] = true;
        p.img_[a] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()] - 1);
    }
    return p;
}

Perm Perm::transposition(int n, int a, int b) { return cycle(n, {a, b}); }

Perm Perm::parse(const std::string& s, int n) {
    Perm p(n);
    std::vector<bool> used(n, false);
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ') { ++i; continue; }
        if (c != '(') throw std::invalid_argument("bad cycle notation: " + s);
        std::size_t j = s.find(')', i);
        if (j == std::string::npos) throw std::invalid_argument("unclosed cycle: " + s);
        std::string inner = s.substr(i + 1, j - i - 1);
        std::vector<int> pts;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
            if (tok.empty()) continue;
            pts.push_back(std::stoi(tok));
        }
        if (pts.size() > 1) {
            for (std::size_t k = 0; k < pts.size(); ++k) {
                int a = pts[k] - 1;
                if (a < 0 || a >= n) throw std::invalid_argument("point out of range in " + s);
                if (used[a]) throw std::invalid_argument("repeated point in " + s);
                used[a] = true;
                p.img_[a] = static_cast<std::uint8_t>(pts[(k + 1) % pts.size()] - 1);
            }
        }
        i = j + 1;
    }
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < n_; ++i) if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm r(n_);
    for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Perm Perm::extend(int n) const {
    if (n < n_) throw std::invalid_argument("cannot shrink degree");
    Perm r(n);
    for (int i = 0; i < n_; ++i) r.img_[i] = img_[i];
    return r;
}

int Perm::sign() const {
    int s = 1;
    for (const auto& c : cycles()) if (c.size() % 2 == 0) s = -s;
    return s;
}

int Perm::order() const {
    int o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
    return o;
}

int Perm::support_max() const {
    for (int i = n_ - 1; i >= 0; --i) if (img_[i] != i) return i + 1;
    return 0;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(n_, false);
    for (int i = 0; i < n_; ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = img_[j]) { seen[j] = true; c.push_back(j + 1); }
        out.push_back(c);
    }
    return out;
}

std::string Perm::str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
        s += "(";
        for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
        s += ")";
    }
    return s;
}

std::uint64_t Perm::key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
    return k;
}

bool Perm::operator<(const Perm& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return img_ < o.img_;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.n_ != q.n_) throw std::invalid_argument("degree mismatch");
    Perm r(p.n_);
    for (int i = 0; i < p.n_; ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
}

Perm conj(const Perm& x, const Perm& g) {
    if (x.n_ != g.n_) throw std::invalid_argument("degree mismatch");
    // x^g maps i^g to (i^x)^g
    Perm r(x.n_);
    for (int i = 0; i < x.n_; ++i) r.img_[g.img_[i]] = g.img_[x.img_[i]];
    return r;
}

Perm power(const Perm& p, long e) {
    Perm base = e < 0 ? p.inverse() : p;
    long k = e < 0 ? -e : e;
    Perm r(p.degree());
    while (k > 0) {
        if (k & 1) r = compose(r, base);
        base = compose(base, base);
        k >>= 1;
    }
    return r;
}

std::string CycleType::str() const {
    if (lengths.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < lengths.size()) {
        std::size_t j = i;
        while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
        if (!s.empty()) s += ".";
        s += std::to_string(lengths[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

CycleType cycle_type(const Perm& p) {
    CycleType ct;
    for (const auto& c : p.cycles()) ct.lengths.push_back(static_cast<int>(c.size()));
    std::sort(ct.lengths.rbegin(), ct.lengths.rend());
    return ct;
}

CycleType parse_cycle_type(const std::string& s) {
    CycleType ct;
    if (s == "1" || s.empty()) return ct;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '.')) {
        auto h = part.find('^');
        int len = std::stoi(part.substr(0, h));
        int mult = h == std::string::npos ? 1 : std::stoi(part.substr(h + 1));
        for (int i = 0; i < mult; ++i) ct.lengths.push_back(len);
    }
    std::sort(ct.lengths.rbegin(), ct.lengths.rend());
    return ct;
}

namespace {
// cycles sorted by length descending, then by least point; fixed points appended as 1-cycles
std::vector<std::vector<int>> canonical_cycles(const Perm& p) {
    auto cs = p.cycles();
    std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (int i = 1; i <= p.degree(); ++i)
        if (p.image(i) == i) cs.push_back({i});
    return cs;
}
}  // namespace

std::optional<Perm> conjugator(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree() || !(cycle_type(p) == cycle_type(q))) return std::nullopt;
    auto a = canonical_cycles(p), b = canonical_cycles(q);
    std::vector<int> img(p.degree(), 0);
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t k = 0; k < a[c].size(); ++k) img[a[c][k] - 1] = b[c][k];
    return Perm(p.degree(), img);
}

std::optional<Perm> odd_centralizing(const Perm& p) {
    int n = p.degree();
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i) if (p.image(i) == i) fixed.push_back(i);
    if (fixed.size() >= 2) return Perm::transposition(n, fixed[0], fixed[1]);
    auto cs = p.cycles();
    for (const auto& c : cs)
        if (c.size() % 2 == 0) return Perm::cycle(n, c);
    // two cycles of equal odd length: swapping them is a product of an odd number of transpositions
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i].size() == cs[j].size()) {
                Perm g(n);
                std::vector<int> img(n);
                for (int x = 1; x <= n; ++x) img[x - 1] = x;
                for (std::size_t k = 0; k < cs[i].size(); ++k) {
                    img[cs[i][k] - 1] = cs[j][k];
                    img[cs[j][k] - 1] = cs[i][k];
                }
                return Perm(n, img);
            }
    return std::nullopt;
}

std::optional<Perm> even_conjugator(const Perm& p, const Perm& q) {
    auto g = conjugator(p, q);
    if (!g) return std::nullopt;
    if (g->sign() == 1) return g;
    auto c = odd_centralizing(p);
    if (!c) return std::nullopt;
    return compose(*c, *g);
}

GenSet centralizer_gens(const Perm& p) {
    GenSet gs;
    int n = p.degree();
    gs.n = n;
    gs.label = "C_{S" + std::to_string(n) + "}(" + p.str() + ")";
    auto cs = canonical_cycles(p);
    std::map<std::size_t, std::vector<std::vector<int>>> by_len;
    for (const auto& c : cs) by_len[c.size()].push_back(c);
    for (const auto& [len, group] : by_len) {
        if (len > 1)
            for (const auto& c : group) gs.gens.push_back(Perm::cycle(n, c));
        std::size_t m = group.size();
        if (m < 2) continue;
        // swap first two cycles pointwise, and rotate all cycles of this length
        std::vector<int> sw(n), rot(n);
        for (int x = 1; x <= n; ++x) sw[x - 1] = rot[x - 1] = x;
        for (std::size_t k = 0; k < len; ++k) {
            sw[group[0][k] - 1] = group[1][k];
            sw[group[1][k] - 1] = group[0][k];
            for (std::size_t j = 0; j < m; ++j) rot[group[j][k] - 1] = group[(j + 1) % m][k];
        }
        gs.gens.emplace_back(n, sw);
        if (m > 2) gs.gens.emplace_back(n, rot);
    }
    return gs;
}

GenSet normalizer_e1_gens(int n) {
    if (n < 6) throw std::invalid_argument("degree too small");
    GenSet gs;
    gs.n = n;
    gs.label = "N_{S" + std::to_string(n) + "}(<(1,2,3)(4,5,6)>)";
    gs.gens.push_back(Perm::parse("(1,2,3)", n));
    gs.gens.push_back(Perm::parse("(2,3)(5,6)", n));
    gs.gens.push_back(Perm::parse("(1,4)(2,5)(3,6)", n));
    if (n >= 8) gs.gens.push_back(Perm::transposition(n, 7, 8));
    if (n >= 9) {
        std::vector<int> c;
        for (int i = 7; i <= n; ++i) c.push_back(i);
        gs.gens.push_back(Perm::cycle(n, c));
    }
    return gs;
}

GenSet alt_presentation_centralizer_s1() {
    GenSet gs;
    gs.n = 12;
    gs.label = "C_{S12}(s_1) alt";
    gs.gens.push_back(Perm::parse("(1,2)", 12));
    for (int i = 1; i <= 9; i += 2)
        gs.gens.push_back(Perm::parse("(" + std::to_string(i) + "," + std::to_string(i + 2) + ")(" +
                                          std::to_string(i + 1) + "," + std::to_string(i + 3) + ")",
                                      12));
    return gs;
}

bool validate_centralizes(const GenSet& g, const Perm& p) {
    for (const auto& h : g.gens)
        if (h.degree() != g.n || conj(p, h) != p) return false;
    return true;
}

bool validate_normalizes(const GenSet& g, const Perm& p) {
    int o = p.order();
    for (const auto& h : g.gens) {
        if (h.degree() != g.n) return false;
        Perm q = conj(p, h);
        bool in = false;
        Perm x = p;
        for (int k = 1; k <= o && !in; ++k, x = compose(x, p)) in = (x == q);
        if (!in) return false;
    }
    return true;
}

std::vector<Perm> group_elements(const GenSet& g) {
    std::vector<Perm> out{Perm(g.n)};
    std::unordered_set<std::uint64_t> seen{out[0].key()};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& h : g.gens) {
            Perm y = compose(out[i], h);
            if (seen.insert(y.key()).second) out.push_back(y);
        }
    return out;
}

std::vector<std::vector<Perm>> transversal_chain(const GenSet& g) {
    std::vector<Perm> level = group_elements(g);
    std::vector<std::vector<Perm>> chain;
    for (int b = 0; b < g.n && level.size() > 1; ++b) {
        std::map<int, Perm> reps;
        std::vector<Perm> next;
        for (const auto& x : level) {
            reps.emplace(x[b], x);
            if (x[b] == b) next.push_back(x);
        }
        if (reps.size() == 1) continue;
        std::vector<Perm> t;
        for (auto& [img, x] : reps) t.push_back(x);
        chain.push_back(std::move(t));
        level = std::move(next);
    }
    return chain;
}

std::vector<Perm> enumerate_cycle_type(int n, const CycleType& ct) {
    int moved = std::accumulate(ct.lengths.begin(), ct.lengths.end(), 0);
    if (moved > n) return {};
    // multiset of remaining cycle lengths; the least unused point either stays fixed or opens a cycle
    std::map<int, int> remaining;
    for (int l : ct.lengths) remaining[l]++;
    int fixed_left = n - moved;
    std::vector<int> img(n, 0);
    std::vector<bool> used(n, false);
    std::vector<Perm> out;
    std::function<void()> rec;
    std::function<void(std::vector<int>&, int)> fill;
    rec = [&]() {
        int first = -1;
        for (int i = 0; i < n; ++i) if (!used[i]) { first = i; break; }
        if (first < 0) {
            std::vector<int> im1(n);
            for (int i = 0; i < n; ++i) im1[i] = img[i] + 1;
            out.emplace_back(n, im1);
            return;
        }
        if (fixed_left > 0) {
            used[first] = true; img[first] = first; --fixed_left;
            rec();
            used[first] = false; ++fixed_left;
        }
        for (auto& [len, cnt] : remaining) {
            if (cnt == 0) continue;
            --cnt;
            used[first] = true;
            std::vector<int> cyc{first};
            fill(cyc, len);
            used[first] = false;
            ++cnt;
        }
    };
    fill = [&](std::vector<int>& cyc, int len) {
        if (static_cast<int>(cyc.size()) == len) {
            for (int k = 0; k < len; ++k) img[cyc[k]] = cyc[(k + 1) % len];
            rec();
            return;
        }
        for (int x = cyc[0] + 1; x < n; ++x) {
            if (used[x]) continue;
            used[x] = true; cyc.push_back(x);
            fill(cyc, len);
            cyc.pop_back(); used[x] = false;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace axc
