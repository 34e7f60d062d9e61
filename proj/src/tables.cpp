// SPDX-License-Identifier: MIT
// Reports over the dihedral algebras, class sizes, valencies and eigenmatrix rows.
#include <algorithm>
#include <string>

#include "axc/data.hpp"
#include "axc/decomp.hpp"
#include "axc/invsets.hpp"
#include "axc/nsalgebra.hpp"

namespace axc::decomp {

namespace {

const json& checks() { return data::get("checks.json"); }
const json& modules() { return data::get("modules.json"); }

std::vector<Rat> as_rats(const json& j) { return data::rats(j); }

json rats_json_local(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(str(q));
    return a;
}

}  // namespace

Report norton_sakuma_report() {
    Report rep{"norton-sakuma"};
    int samples = checks().value("norton_samples", 100);
    for (const auto& type : ns::types()) {
        ns::AxiomReport ar;
        try {
            ar = ns::verify_axioms(ns::build(type), samples);
        } catch (const std::exception& e) {
            rep.fail(type + ": " + e.what());
            continue;
        }
        std::string l = type + ": ";
        l += ar.ok() ? "all axioms hold" : std::to_string(ar.failures.size()) + " failures";
        l += ", Norton inequality on " + std::to_string(ar.norton_samples) + " samples";
        if (ar.rotation_order) l += ", rotation of order " + std::to_string(ar.rotation_order);
        rep.line(l);
        for (const auto& f : ar.failures) rep.fail(type + ": " + f);
        rep.data[type] = {{"ok", ar.ok()}, {"failures", ar.failures}};
    }
    return rep;
}

Report classes_report() {
    Report rep{"classes"};
    for (const auto& [n, sizes] : checks().at("class_sizes").items()) {
        for (const auto& [k, want] : sizes.items()) {
            long got = inv::class_set(std::stoi(n), k[0]).size();
            rep.line("|X_" + k + "| at n=" + n + ": " + std::to_string(got));
            if (got != want.get<long>()) rep.fail("|X_" + k + "| = " + std::to_string(got) + ", want " + std::to_string(want.get<long>()));
        }
    }
    auto sc = inv::self_check();
    for (const auto& l : sc.lines) rep.line(l);
    for (const auto& f : sc.failures) rep.fail(f);
    for (const auto& [n, want] : data::get("classes.json").at("tt_valency").items()) {
        auto got = inv::suborbits(std::stoi(n), "tt").valencies();
        long sum = 0;
        for (long k : got) sum += k;
        rep.line("k_i(" + n + ") sums to " + std::to_string(sum));
        if (sum != spectral::class_size('t', std::stoi(n)))
            rep.fail("k_i(" + n + ") sums to " + std::to_string(sum) + ", not |X_t|");
    }
    for (int n = 8; n <= 12; ++n) {
        auto s = spectral::sigma_check(n);
        for (const auto& f : s.failures) rep.fail("sigma n=" + std::to_string(n) + ": " + f);
    }
    return rep;
}

Report eigenmatrix_report() {
    Report rep{"eigenmatrix"};
    json out = json::object();
    auto compare = [&](const std::string& what, const std::vector<Rat>& got, const std::vector<Rat>& want) {
        if (got == want) return;
        std::string diff;
        for (std::size_t j = 0; j < std::min(got.size(), want.size()); ++j)
            if (got[j] != want[j]) diff += " [" + std::to_string(j + 1) + "] " + str(got[j]) + " vs " + str(want[j]);
        if (got.size() != want.size()) diff += " (length " + std::to_string(got.size()) + " vs " + std::to_string(want.size()) + ")";
        rep.fail(what + ": computed vs printed" + diff);
    };

    // s and b rows at degree 12
    for (char kind : {'s', 'b'}) {
        const auto& m = modules().at(std::string(1, kind) + std::string(1, kind));
        for (const auto& [label, want] : m.at("expected_rows").items()) {
            const auto& r = spectral::row(kind, 12, label);
            compare(std::string(1, kind) + " row " + label, r.values, as_rats(want));
            out[std::string(1, kind)][label] = rats_json_local(r.values);
        }
    }
    const auto& ss = modules().at("ss");
    for (const auto& [label, want] : ss.at("expected_dims").items()) {
        Int d = spectral::row('s', 12, label).dim;
        if (d != want.get<long>()) rep.fail("dim S^(" + label + ") = " + d.get_str() + ", want " + std::to_string(want.get<long>()));
    }
    rep.line("s and b rows at n=12 compared with the configured tables");

    // t columns on the listed orbitals
    const auto& tt = modules().at("tt");
    std::vector<int> cols = tt.at("column_orbitals").get<std::vector<int>>();
    for (const auto& [n, labels] : tt.at("expected_columns").items()) {
        for (const auto& [label, want] : labels.items()) {
            const auto& r = spectral::row('t', std::stoi(n), label);
            std::vector<Rat> got;
            for (int id : cols) got.push_back(r.at(id));
            compare("t n=" + n + " " + label, got, as_rats(want));
        }
    }
    for (const auto& [n, want] : tt.at("mult2_solutions").items()) {
        auto m2 = spectral::eigenmatrix_row_mult2(std::stoi(n));
        auto w = as_rats(want);
        bool found = false;
        for (std::size_t i = 0; i < m2.roots.size(); ++i)
            if (m2.roots[i] == w && m2.admissible[i]) found = true;
        rep.line("n=" + n + " (n-4,2^2): " + std::to_string(m2.roots.size()) + " rational solutions");
        if (!found) rep.fail("n=" + n + ": " + str(w) + " is not an admissible solution");
    }

    // orthogonality of the multiplicity-free rows
    auto orth = [&](char kind, int n, const std::vector<std::string>& labels) {
        Rat size(static_cast<long>(spectral::class_size(kind, n)));
        int checked = 0;
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = a; b < labels.size(); ++b) {
                const auto& ra = spectral::row(kind, n, labels[a]);
                const auto& rb = spectral::row(kind, n, labels[b]);
                Rat want = a == b ? Rat(size / Rat(ra.dim)) : Rat(0);
                want.canonicalize();
                Rat got = spectral::orthogonality(ra, rb);
                ++checked;
                if (got != want)
                    rep.fail(std::string(1, kind) + " n=" + std::to_string(n) + " <" + labels[a] + ", " + labels[b] + "> = " + str(got) + ", want " + str(want));
            }
        rep.line(std::string(1, kind) + " n=" + std::to_string(n) + ": " + std::to_string(checked) + " orthogonality relations");
    };
    std::vector<std::string> sl, bl;
    for (const auto& l : spectral::constituents('s', 12)) sl.push_back(l);
    for (const auto& l : spectral::constituents('b', 12))
        if (!modules()["bb"]["mult2_diagonal"].contains(l)) bl.push_back(l);
    orth('s', 12, sl);
    orth('b', 12, bl);
    for (int n = 8; n <= 12; ++n) {
        std::vector<std::string> tl;
        for (const auto& l : spectral::constituents('t', n))
            tl.push_back(l);
        orth('t', n, tl);
    }
    rep.data = out;
    return rep;
}

Report gamma_report() {
    Report rep{"gamma"};
    for (const auto& [id, want] : checks().at("recompute").at("st").items()) {
        auto g = inv::recompute_gamma_entry("st", std::stoi(id));
        Rat configured = inv::gamma("st", std::stoi(id));
        rep.line("st " + id + ": recomputed " + str(g.value) + ", configured " + str(configured));
        if (g.value != parse_rat(want.get<std::string>()) || g.value != configured)
            rep.fail("st " + id + ": recomputed " + str(g.value) + ", want " + want.get<std::string>());
    }
    // the 6A chain: st orbital 6 through two nested factorisations
    auto g6 = inv::recompute_gamma_entry("st", 6);
    Rat want6 = parse_rat(checks()["recompute"]["chain_6A"]["value"].get<std::string>());
    rep.line("st 6 via the 6A chain: " + str(g6.value));
    if (g6.value != want6) rep.fail("st 6: recomputed " + str(g6.value) + ", want " + str(want6));
    return rep;
}

}  // namespace axc::decomp
