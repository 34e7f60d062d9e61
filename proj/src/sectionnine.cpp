// SPDX-License-Identifier: MIT
// The map to S^(6,1^(n-6)) (x) A, its relations, and the 4A odd-axis Gram check.
#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "axc/data.hpp"
#include "axc/decomp.hpp"
#include "axc/invsets.hpp"

namespace axc::decomp {

using specht::SpechtVec;

namespace {

const json& s9() { return data::get("section9.json"); }

const SpechtVec& cached_w(int n) {
    static std::mutex mu;
    static std::map<int, SpechtVec> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, specht::w_n(n)).first;
    return it->second;
}

Perm at_degree(const std::string& s, int n) { return Perm::parse(s, n); }

bool fits(const std::string& s, int n) { return Perm::parse(s, 12).support_max() <= n; }

SpechtVec combination(const std::vector<std::pair<long long, Perm>>& terms, int n) {
    SpechtVec out;
    bool first = true;
    for (const auto& [c, p] : terms) {
        SpechtVec v = zeta_project(p, n).scaled(c);
        if (first) out = v, first = false;
        else out += v;
    }
    return out;
}

long long small_int(const std::string& s) {
    Rat q = parse_rat(s);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw std::invalid_argument("relation coefficient " + s);
    return q.get_num().get_si();
}

}  // namespace

SpechtVec zeta_project(const Perm& p, int n) {
    if (n < 8 || n > 12) throw std::invalid_argument("zeta is defined for 8 <= n <= 12");
    if (!(cycle_type(p) == inv::kind_cycle_type('t'))) throw std::invalid_argument(p.str() + " is not of type 3^2");
    Perm e1 = inv::base_point('t', n);
    auto g = conjugator(e1, inv::canonical('t', p.extend(n)));
    if (!g) throw std::invalid_argument(p.str() + " is not a product of two disjoint 3-cycles");
    return cached_w(n).act(*g);
}

Report dipendenti_report() {
    Report rep{"dipendenti"};
    for (int n : {8, 9, 10}) {
        auto r = specht::dipendenti_suite(n);
        rep.line("n=" + std::to_string(n) + ": " + std::to_string(r.listed) + " listed (stated " + std::to_string(r.claimed) +
                 "), rank " + std::to_string(r.rank) + ", dim " + r.dim.get_str() + "; stated orbitals give " +
                 std::to_string(r.family_size) + " vectors of rank " + std::to_string(r.family_rank));
        for (const auto& l : r.lines) rep.line("  " + l);
        for (const auto& f : r.failures) rep.fail(f);
        rep.data[std::to_string(n)] = {{"listed", r.listed}, {"rank", r.rank}, {"dim", r.dim.get_str()},
                                       {"family_rank", r.family_rank}, {"ok", r.ok()}};
    }
    return rep;
}

Report udependent_suite() {
    Report rep{"udependent"};
    const auto& rho = s9().at("rho");
    const auto& rels = s9().at("u_relations");

    // sign under beta and independence of the chosen conjugator
    for (int n = 8; n <= 12; ++n) {
        Perm e1 = inv::base_point('t', n);
        SpechtVec w = cached_w(n);
        SpechtVec wb = zeta_project(inv::beta(e1), n);
        SpechtVec neg = w.scaled(-1);
        bool sign_ok = wb == neg;
        bool inv_ok = zeta_project(e1.inverse(), n) == w;
        rep.line("n=" + std::to_string(n) + ": image of beta(<e_1>) is " + (sign_ok ? "-w_n" : "not -w_n"));
        if (!sign_ok) rep.fail("n=" + std::to_string(n) + ": beta does not act as -1 on the image");
        if (!inv_ok) rep.fail("n=" + std::to_string(n) + ": image depends on the generator of <e_1>");
    }

    for (std::size_t k = 0; k < rels.size(); ++k) {
        const auto& rel = rels[k];
        std::string lhs = rel.at("lhs").get<std::string>();
        for (int n = 8; n <= 12; ++n) {
            bool ok_support = fits(lhs, n);
            std::vector<std::pair<long long, Perm>> terms;
            for (const auto& t : rel.at("rhs")) {
                std::string r = rho.at(t[1].get<std::string>()).get<std::string>();
                ok_support = ok_support && fits(r, n);
                if (ok_support) terms.emplace_back(small_int(t[0].get<std::string>()), at_degree(r, n));
            }
            if (!ok_support) continue;
            bool ok = zeta_project(at_degree(lhs, n), n) == combination(terms, n);
            rep.line("relation for " + lhs + " (" + std::to_string(terms.size()) + " terms), n=" + std::to_string(n) + ": " +
                     (ok ? "holds" : "fails"));
            if (!ok) rep.fail("relation for " + lhs + " fails at n=" + std::to_string(n));
        }
    }

    const int n = 12;
    Perm s1 = inv::base_point('s', n);
    const auto& P = inv::suborbits(n, "st");
    const auto& Xt = inv::class_set(n, 't');
    // orbit of C_{A_12}(s_1): ids aliased to an S_12-orbital name its other half
    auto orbit_of = [&](const Perm& p) {
        Perm c = inv::canonical('t', p);
        int id = inv::classify(n, 's', s1, 't', c);
        for (const auto& [other, primary] : P.alias) {
            if (primary != id) continue;
            auto ref = inv::even_refinement(n, "st", id);
            const auto& cell = P.cells[id - 1];
            int half = ref.half_of[std::find(cell.begin(), cell.end(), Xt.find(c)) - cell.begin()];
            for (const auto& v : ref.variants)
                if (v == "id" + std::to_string(other) + ":" + std::to_string(half)) return other;
        }
        return id;
    };
    for (const auto& cr : s9().at("conjugated_relations")) {
        Perm g = Perm::parse(cr.at("g").get<std::string>(), n);
        int want = cr.at("orbit").get<int>();
        const auto& base = rels.at(cr.at("base").get<std::size_t>());
        Perm lhs = conj(Perm::parse(base.at("lhs").get<std::string>(), n), g);
        int got = orbit_of(lhs);
        rep.line("conjugate of " + base.at("lhs").get<std::string>() + " by " + g.str() + " lies in P_" + std::to_string(got));
        if (got != want) rep.fail(g.str() + ": conjugated left side in P_" + std::to_string(got) + ", want P_" + std::to_string(want));

        // conjugated support against the printed support; a beta image carries the opposite sign modulo the plus part
        std::map<std::uint64_t, long long> image;
        for (const auto& t : base.at("rhs")) {
            Perm r = conj(Perm::parse(rho.at(t[1].get<std::string>()).get<std::string>(), n), g);
            image[inv::canonical('t', r).key()] += small_int(t[0].get<std::string>());
        }
        std::vector<std::pair<long long, Perm>> printed;
        int same = 0, flipped = 0, missing = 0, later = 0;
        for (const auto& t : cr.at("rhs")) {
            Perm p = Perm::parse(t[1].get<std::string>(), n);
            long long c = small_int(t[0].get<std::string>());
            printed.emplace_back(c, p);
            auto key = inv::canonical('t', p).key();
            auto bkey = inv::canonical('t', inv::beta(inv::canonical('t', p))).key();
            if (image.count(key) && image[key] == c) ++same;
            else if (image.count(bkey) && image[bkey] == -c) ++flipped;
            else ++missing;
            if (orbit_of(p) >= want) ++later;
        }
        rep.line("  printed right side: " + std::to_string(same) + " terms conjugate directly, " + std::to_string(flipped) +
                 " as beta images with opposite sign, " + std::to_string(missing) + " unmatched");
        if (missing) rep.fail(g.str() + ": " + std::to_string(missing) + " printed terms are not conjugates of the base relation");
        if (later) rep.fail(g.str() + ": " + std::to_string(later) + " printed terms are not in earlier orbits");
        bool ok = zeta_project(lhs, n) == combination(printed, n);
        rep.line("  printed relation under the map at n=12: " + std::string(ok ? "holds" : "fails"));
        if (!ok) rep.fail(g.str() + ": printed relation fails under the map");
    }
    const auto& extra = s9().at("extra_conjugators");
    for (std::size_t k = 0; k < extra.size(); ++k) {
        Perm g = Perm::parse(extra[k].get<std::string>(), n);
        Perm lhs = conj(Perm::parse(rels.at(0).at("lhs").get<std::string>(), n), g);
        int got = orbit_of(lhs), want = s9().at("extra_orbits").at(k).get<int>();
        rep.line("conjugate of " + rels.at(0).at("lhs").get<std::string>() + " by " + g.str() + " lies in P_" + std::to_string(got));
        if (got != want) rep.fail(g.str() + ": lies in P_" + std::to_string(got) + ", want P_" + std::to_string(want));
    }
    return rep;
}

// ---------------------------------------------------------------- appendix

std::vector<AppendixTerm> appendix_terms() {
    const auto& ap = data::get("appendix.json");
    std::string canon;
    std::vector<AppendixTerm> out;
    for (const auto& t : ap.at("terms")) {
        std::string coef = t.at("coef").get<std::string>(), kind = t.at("kind").get<std::string>(),
                    perm = t.at("perm").get<std::string>();
        canon += coef + " " + kind + " " + perm + "\n";
        AppendixTerm a;
        a.coef = parse_rat(coef);
        a.perm = Perm::parse(perm, 12);
        std::string ct = cycle_type(a.perm).str();
        if (kind == "u" && ct == "3^2") a.kind = 't', a.perm = inv::canonical('t', a.perm);
        else if (kind == "a" && ct == "2^2") a.kind = 'b';
        else if (kind == "a" && ct == "2^6") a.kind = 's';
        else throw std::runtime_error("appendix term " + perm + " has no supported kind");
        out.push_back(a);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(data::fnv1a(canon)));
    if (ap.at("checksum_fnv1a64").get<std::string>() != buf)
        throw std::runtime_error(std::string("appendix data checksum mismatch: ") + buf);
    return out;
}

Report appendix_gram_check() {
    Report rep{"appendix"};
    const auto& ap = data::get("appendix.json");
    const int n = 12;
    auto terms = appendix_terms();
    long classified = 0;
    auto f = [&](char ku, const Perm& u, char kv, const Perm& v) {
        ++classified;
        return inv::gamma_of(n, ku, u, kv, v);
    };
    auto pair_R = [&](char k, const Perm& x) {
        Rat s = 0;
        for (const auto& t : terms) s += t.coef * f(k, x, t.kind, t.perm);
        s.canonicalize();
        return s;
    };

    int u25 = 0;
    for (const auto& t : terms) u25 += t.kind == 't' && t.coef == frac(25, 64);
    rep.line(std::to_string(terms.size()) + " terms, " + std::to_string(u25) + " of them 3-axes with coefficient 25/64");
    if (u25 != 8) rep.fail("expected 8 three-axis terms with coefficient 25/64, found " + std::to_string(u25));

    Rat rr = 0;
    std::vector<Rat> rows;
    for (const auto& t : terms) {
        Rat s = pair_R(t.kind, t.perm);
        rows.push_back(s);
        rr += t.coef * s;
    }
    rr.canonicalize();
    Rat want_rr = parse_rat(ap.at("target_norm").get<std::string>());
    rep.line("f(R, R) = " + str(rr));
    if (rr != want_rr) {
        rep.fail("f(R, R) = " + str(rr) + ", want " + str(want_rr));
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (rows[i] != 0) {
                rep.fail("first term with nonzero pairing: " + str(terms[i].coef) + " " + terms[i].perm.str() + ", f(x, R) = " + str(rows[i]));
                break;
            }
    }

    // reflections t of the dihedral group generated by rho: t inverts rho and t rho is again of type 2^6
    Perm rho = Perm::parse(ap.at("target").get<std::string>(), n);
    Perm rho_inv = rho.inverse(), rho2 = compose(rho, rho);
    Rat want_axis = parse_rat(ap.at("axis_pairing").get<std::string>());
    Rat want_opp = parse_rat(ap.at("opposite_pairing").get<std::string>());
    const auto& Xs = inv::class_set(n, 's');
    int reflections = 0, bad = 0;
    Perm s1 = inv::base_point('s', n);
    bool s1_reflection = false;
    for (const auto& t : Xs.points) {
        if (conj(rho, t) != rho_inv || Xs.find(compose(t, rho)) < 0) continue;
        ++reflections;
        if (t == s1) s1_reflection = true;
        Rat a = pair_R('s', t);
        Rat o = f('s', t, 's', compose(t, rho2));
        if (reflections == 1) rep.line("t_0 = " + t.str() + ": f(a_t0, R) = " + str(a) + ", f(a_t0, a_t0 rho^2) = " + str(o));
        if ((a != want_axis || o != want_opp) && bad++ == 0) {
            rep.fail("reflection " + t.str() + ": f(a, R) = " + str(a) + " (want " + str(want_axis) + "), opposite pairing " + str(o));
            // split the pairing by the kind of term it comes from
            std::map<char, Rat> part;
            for (const auto& term : terms) part[term.kind] += term.coef * f('s', t, term.kind, term.perm);
            std::string by;
            for (auto& [k, v] : part) {
                v.canonicalize();
                by += std::string(by.empty() ? "" : ", ") + k + ": " + str(v);
            }
            rep.line("  contributions by term kind at " + t.str() + ": " + by);
        }
    }
    rep.line(std::to_string(reflections) + " reflections of type 2^6 invert rho; " + std::to_string(reflections - bad) +
             " pair with R to " + str(want_axis));
    rep.line(std::string("s_1 ") + (s1_reflection ? "is" : "is not") + " one of them");
    if (reflections == 0) rep.fail("no reflection of type 2^6 inverts rho");

    // classification is invariant under conjugation
    std::mt19937 rng(7);
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    int spot_bad = 0;
    for (int k = 0; k < 40; ++k) {
        std::shuffle(pts.begin(), pts.end(), rng);
        Perm g(n, pts);
        const auto& a = terms[rng() % terms.size()];
        const auto& b = terms[rng() % terms.size()];
        Perm ag = conj(a.perm, g), bg = conj(b.perm, g);
        if (a.kind == 't') ag = inv::canonical('t', ag);
        if (b.kind == 't') bg = inv::canonical('t', bg);
        if (f(a.kind, a.perm, b.kind, b.perm) != f(a.kind, ag, b.kind, bg)) ++spot_bad;
    }
    if (spot_bad) rep.fail(std::to_string(spot_bad) + " pairings change under conjugation");
    rep.line(std::to_string(classified) + " pairings classified");
    if (classified < 10000) rep.fail("only " + std::to_string(classified) + " pairings classified");
    rep.data = {{"norm", str(rr)}, {"reflections", reflections}, {"axis_pairing_ok", reflections - bad}, {"classified", classified}};
    return rep;
}

}  // namespace axc::decomp
