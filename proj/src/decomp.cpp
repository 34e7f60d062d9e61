// SPDX-License-Identifier: MIT
#include "axc/decomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "axc/data.hpp"
#include "axc/invsets.hpp"

namespace axc::decomp {

using spectral::OrbitSumVec;

namespace {

const json& checks() { return data::get("checks.json"); }
const json& modules() { return data::get("modules.json"); }

std::string mat_str(const RatMatrix& m) { return m.rows() ? m.str() : "[]"; }

json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(str(q));
    return a;
}

json mat_json(const RatMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rats_json(m.row(i)));
    return a;
}

RatMatrix parse_mat(const json& j) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j) rows.push_back(data::rats(r));
    return RatMatrix::from_rows(rows);
}

bool same_shape(const std::string& a, const std::string& b, int n) { return data::partition(a, n) == data::partition(b, n); }

// copies of lambda in the action, as configured
int copies(char kind, int n, const std::string& label) {
    if (kind == 'b' && n == 12 && modules().at("bb").at("mult2_diagonal").contains(label))
        return static_cast<int>(modules()["bb"]["mult2_diagonal"][label].size());
    return 1;
}

// v = s * w for some s; returns s
std::optional<Rat> ratio(const std::vector<Rat>& v, const std::vector<Rat>& w) {
    if (v.size() != w.size()) return std::nullopt;
    std::optional<Rat> s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (w[i] == 0) {
            if (v[i] != 0) return std::nullopt;
            continue;
        }
        Rat q = v[i] / w[i];
        if (s && *s != q) return std::nullopt;
        s = q;
    }
    return s;
}

}  // namespace

std::string Report::markdown() const {
    std::ostringstream os;
    os << "## " << name << " : " << (ok() ? "PASS" : "FAIL") << "\n\n";
    for (const auto& l : lines) os << "- " << l << "\n";
    if (!failures.empty()) {
        os << "\nMismatches:\n\n";
        for (const auto& f : failures) os << "- " << f << "\n";
    }
    return os.str();
}

json Report::to_json() const {
    return json{{"name", name}, {"ok", ok()}, {"lines", lines}, {"failures", failures}, {"data", data}};
}

// ---------------------------------------------------------------- shape

std::vector<ShapeScanResult> shape_scan() {
    const auto& sc = checks().at("shape_scan");
    std::vector<spectral::EigenRow> rows;
    for (const auto& l : sc.at("rows")) rows.push_back(spectral::row('s', 12, l.get<std::string>()));
    std::vector<ShapeScanResult> out;
    for (const auto& x : sc.at("X"))
        for (const auto& y : sc.at("Y"))
            for (const auto& z : sc.at("Z")) {
                ShapeScanResult r{x.get<std::string>(), y.get<std::string>(), z.get<std::string>(), {}, 0, 0, false};
                for (const auto& t : sc.at("template")) {
                    std::string s = t.get<std::string>();
                    if (s == "X") r.gamma.push_back(inv::shape_gamma(r.x));
                    else if (s == "Y") r.gamma.push_back(inv::shape_gamma(r.y));
                    else if (s == "Z") r.gamma.push_back(inv::shape_gamma(r.z));
                    else r.gamma.push_back(parse_rat(s));
                }
                Rat f[2];
                for (int k = 0; k < 2; ++k) {
                    for (std::size_t j = 0; j < r.gamma.size(); ++j) f[k] += r.gamma[j] * rows[k].values.at(j);
                    f[k].canonicalize();
                }
                r.f_66 = f[0];
                r.f_26 = f[1];
                r.admissible = r.f_66 >= 0 && r.f_26 >= 0;
                out.push_back(std::move(r));
            }
    return out;
}

Report shape_report() {
    Report rep{"shape"};
    auto res = shape_scan();
    std::vector<std::string> want;
    for (const auto& s : checks().at("shape_scan").at("admissible")) want.push_back(s.get<std::string>());
    int admissible = 0;
    json arr = json::array();
    for (const auto& r : res) {
        rep.line("(" + r.x + ", " + r.y + ", " + r.z + "): f(6^2) = " + str(r.f_66) + ", f(2^6) = " + str(r.f_26) +
                 (r.admissible ? "  admissible" : ""));
        arr.push_back({{"shape", {r.x, r.y, r.z}}, {"f_6^2", str(r.f_66)}, {"f_2^6", str(r.f_26)}, {"admissible", r.admissible}});
        if (!r.admissible) continue;
        ++admissible;
        if (std::vector<std::string>{r.x, r.y, r.z} != want) rep.fail("unexpected admissible shape (" + r.x + ", " + r.y + ", " + r.z + ")");
        else if (r.f_66 != 0 || r.f_26 != 0) rep.fail("admissible shape has nonzero f");
    }
    if (admissible != 1) rep.fail(std::to_string(admissible) + " admissible shapes, want exactly one");
    rep.data["candidates"] = arr;
    return rep;
}

// ---------------------------------------------------------------- radicals

FixedGram isotypic_fixed_gram(char kind, int n, const std::string& label) {
    FixedGram fg;
    fg.label = label;
    int k = copies(kind, n, label);
    // the diagonal entries of the block rows sum to the trace, which gives the central idempotent
    auto project_all = [&](const OrbitSumVec& v) {
        OrbitSumVec out = v;
        std::fill(out.coords.begin(), out.coords.end(), Rat(0));
        for (int c = 1; c <= k; ++c) {
            auto p = spectral::project(v, spectral::row(kind, n, label, c));
            for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += p.coords[i];
        }
        return out;
    };
    std::vector<OrbitSumVec> basis;
    std::vector<std::vector<Rat>> rows;
    fg.idempotent = true;
    for (int id : inv::suborbits(n, spectral::pair_of(kind)).ids) {
        auto e = project_all(spectral::cell_vector(n, kind, kind, id));
        if (project_all(e).coords != e.coords) fg.idempotent = false;
        rows.push_back(e.coords);
        if (rank(RatMatrix::from_rows(rows)) > basis.size()) basis.push_back(e);
        else rows.pop_back();
    }
    fg.dim = basis.size();
    fg.gram = RatMatrix(fg.dim, fg.dim);
    for (std::size_t i = 0; i < fg.dim; ++i)
        for (std::size_t j = 0; j < fg.dim; ++j) fg.gram(i, j) = spectral::restricted_gram(basis[i], basis[j]);
    fg.rank = rank(fg.gram);
    return fg;
}

RadicalReport radical_report(char kind, int n) {
    RadicalReport rr;
    rr.kind = kind;
    rr.n = n;
    for (const auto& label : spectral::constituents(kind, n)) {
        for (int c = 1; c <= copies(kind, n, label); ++c) {
            const auto& row = spectral::row(kind, n, label, c);
            RadicalEntry e{label + (copies(kind, n, label) > 1 ? " copy " + std::to_string(c) : ""), row.lambda,
                           spectral::f_lambda(row)};
            if (kind == 't') e.parity = spectral::beta_parity(row);
            if (e.f == 0 && copies(kind, n, label) == 1) rr.zeros.push_back(label);
            if (e.f < 0) rr.negative.push_back(e.label);
            rr.entries.push_back(std::move(e));
        }
        if (copies(kind, n, label) == 2) rr.diagonal = isotypic_fixed_gram(kind, n, label);
    }
    return rr;
}

Report radical_suite() {
    Report rep{"radicals"};
    auto as_set = [](const json& j) {
        std::set<std::string> s;
        for (const auto& x : j) s.insert(x.get<std::string>());
        return s;
    };
    auto compare = [&](const RadicalReport& rr, const std::set<std::string>& want, const std::string& tag) {
        std::set<std::string> got(rr.zeros.begin(), rr.zeros.end());
        std::string z;
        for (const auto& s : rr.zeros) z += (z.empty() ? "" : "; ") + s;
        rep.line(tag + ": f = 0 at {" + z + "}");
        for (const auto& e : rr.entries) {
            std::string p = rr.kind == 't' ? " (" + spectral::str(e.parity) + ")" : "";
            rep.line("  " + e.label + " = " + data::partition_str(e.lambda) + ": f = " + str(e.f) + p);
            if (rr.kind == 't' && e.parity != spectral::Parity::minus) rep.fail(tag + ": " + e.label + " is not in the minus part");
        }
        if (got != want) rep.fail(tag + ": zero set differs from the configured radical");
        for (const auto& s : rr.negative) rep.fail(tag + ": f < 0 at " + s);
        rep.data[tag] = {{"zeros", rr.zeros}};
    };
    compare(radical_report('s', 12), as_set(modules()["ss"]["radical"]), "ss n=12");
    auto bb = radical_report('b', 12);
    compare(bb, as_set(modules()["bb"]["radical"]), "bb n=12");
    if (bb.diagonal) {
        const auto& d = *bb.diagonal;
        rep.line("  " + d.label + " component, fixed vectors of the base stabilizer: dim " + std::to_string(d.dim) +
                 ", form rank " + std::to_string(d.rank));
        if (!d.idempotent) rep.fail("bb n=12: the summed copy projections of " + d.label + " are not idempotent");
        if (d.rank * 2 != d.dim) rep.fail("bb n=12: " + d.label + " component has no diagonal radical (rank " + std::to_string(d.rank) + " of " + std::to_string(d.dim) + ")");
    }
    for (int n = 8; n <= 12; ++n)
        compare(radical_report('t', n), as_set(modules()["tt"]["radical_minus"][std::to_string(n)]),
                "tt minus n=" + std::to_string(n));
    return rep;
}

// ---------------------------------------------------------------- projections

std::optional<OrbitSumVec> ProjectionCheck::printed() const {
    if (expected.size() != computed.ids.size()) return std::nullopt;
    OrbitSumVec v = computed;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!expected[i]) return std::nullopt;
        v.coords[i] = *expected[i];
    }
    return v;
}

namespace {

OrbitSumVec input_vector(const json& spec, int n) {
    char group = spec.at("group").get<std::string>()[0];
    char cls = spec.at("class").get<std::string>()[0];
    if (spec.at("source") == "base") {
        if (group != cls) throw std::invalid_argument("base vectors live in their own class");
        return spectral::base_vector(cls, n);
    }
    return spectral::cell_vector(n, group, cls, spec.at("cell").get<int>());
}

std::string diagnose(const ProjectionCheck& pc, const json& spec) {
    auto pv = pc.printed();
    if (!pv) return "";
    std::string label = spec.at("lambda").get<std::string>();
    std::vector<int> cells;
    if (spec.at("source") == "orbit") cells = pc.input.partition().ids;
    else cells = {0};
    for (int cell : cells) {
        OrbitSumVec in = cell ? spectral::cell_vector(pc.n, pc.input.group, pc.input.cls, cell) : pc.input;
        for (int c = 1; c <= copies(pc.input.cls, pc.n, label); ++c) {
            const auto& row = spectral::row(pc.input.cls, pc.n, label, c);
            auto got = spectral::project(in, row);
            if (spec.value("normalized", false)) got = spectral::normalized(got);
            auto s = ratio(pv->coords, got.coords);
            if (!s || *s == 0) continue;
            Rat xd = Rat(spectral::class_size(row.kind, row.n)) / Rat(row.dim);
            xd.canonicalize();
            std::string how = *s == 1 ? "exactly" : "scaled by " + str(*s) + (*s == xd ? " = |X|/dim" : "");
            return "printed vector is the projection of " + (cell ? "cell " + std::to_string(cell) : std::string("the base")) +
                   " onto copy " + std::to_string(c) + ", " + how;
        }
    }
    return "printed vector is not a multiple of any single-cell projection";
}

}  // namespace

std::vector<ProjectionCheck> projection_suite() {
    std::vector<ProjectionCheck> out;
    for (const auto& spec : checks().at("projections")) {
        ProjectionCheck pc;
        pc.id = spec.at("id").get<std::string>();
        pc.n = spec.value("n", 12);
        pc.input = input_vector(spec, pc.n);
        std::string label = spec.at("lambda").get<std::string>();
        int copy = spec.value("copy", 1);
        const auto& row = spectral::row(pc.input.cls, pc.n, label, copy);
        pc.computed = spectral::project(pc.input, row);
        if (spec.value("normalized", false)) pc.computed = spectral::normalized(pc.computed);
        for (const auto& e : spec.at("expected")) {
            std::string s = e.get<std::string>();
            pc.expected.push_back(s == "?" ? std::nullopt : std::optional<Rat>(parse_rat(s)));
        }
        pc.match = pc.expected.size() == pc.computed.coords.size();
        for (std::size_t i = 0; pc.match && i < pc.expected.size(); ++i)
            if (pc.expected[i] && *pc.expected[i] != pc.computed.coords[i]) pc.match = false;
        if (auto pv = pc.printed()) {
            OrbitSumVec sum = *pv;
            std::fill(sum.coords.begin(), sum.coords.end(), Rat(0));
            for (int c = 1; c <= copies(pc.input.cls, pc.n, label); ++c) {
                auto p = spectral::project(*pv, spectral::row(pc.input.cls, pc.n, label, c));
                for (std::size_t i = 0; i < sum.coords.size(); ++i) sum.coords[i] += p.coords[i];
            }
            pc.printed_in_component = sum.coords == pv->coords;
        }
        if (!pc.match) pc.diagnosis = diagnose(pc, spec);
        out.push_back(std::move(pc));
    }
    return out;
}

Report projection_report() {
    Report rep{"projections"};
    json arr = json::array();
    for (const auto& pc : projection_suite()) {
        std::string exp = "(";
        for (std::size_t i = 0; i < pc.expected.size(); ++i)
            exp += (i ? ", " : "") + (pc.expected[i] ? str(*pc.expected[i]) : std::string("?"));
        exp += ")";
        rep.line(pc.id + ": " + str(pc.computed.coords) + (pc.match ? "" : "  printed " + exp));
        for (std::size_t i = 0; i < pc.expected.size() && i < pc.computed.coords.size(); ++i)
            if (!pc.expected[i]) rep.line("  entry " + std::to_string(i + 1) + " unreadable in print, recomputed as " + str(pc.computed.coords[i]));
        if (!pc.match) rep.fail(pc.id + ": computed " + str(pc.computed.coords) + ", printed " + exp + "; " + pc.diagnosis);
        arr.push_back({{"id", pc.id}, {"n", pc.n}, {"computed", rats_json(pc.computed.coords)}, {"match", pc.match},
                       {"printed_in_component", pc.printed_in_component}, {"diagnosis", pc.diagnosis}});
    }
    rep.data["projections"] = arr;
    return rep;
}

// ---------------------------------------------------------------- intersections

std::vector<GramCheck> intersection_suite() {
    auto projections = projection_suite();
    auto find = [&](const std::string& id) -> const ProjectionCheck& {
        for (const auto& p : projections)
            if (p.id == id) return p;
        throw std::out_of_range("no projection " + id);
    };
    // (vector used in the test, recomputed vector, which one)
    auto vec = [&](const std::string& id, int n) -> std::tuple<OrbitSumVec, OrbitSumVec, std::string> {
        if (id.rfind("ones_", 0) == 0) {
            auto v = spectral::ones_vector(n, 's', id[5]);
            return {v, v, "recomputed"};
        }
        const auto& p = find(id);
        auto pv = p.printed();
        if (pv && p.printed_in_component) return {*pv, p.computed, "printed"};
        return {p.computed, p.computed, "recomputed"};
    };
    std::vector<GramCheck> out;
    for (const auto& g : checks().at("grams")) {
        GramCheck gc;
        gc.id = g.at("id").get<std::string>();
        gc.n = g.value("n", 12);
        auto [x, xr, xs] = vec(g.at("x").get<std::string>(), gc.n);
        auto [y, yr, ys] = vec(g.at("y").get<std::string>(), gc.n);
        gc.vectors = xs + "/" + ys;
        gc.expected = parse_mat(g.at("expected"));
        gc.expected_det = parse_rat(g.at("det").get<std::string>());
        auto t = spectral::pair_det_test(x, y);
        gc.computed = t.gram;
        gc.det = t.det;
        auto tr = spectral::pair_det_test(xr, yr);
        gc.recomputed = tr.gram;
        gc.recomputed_det = tr.det;
        RatMatrix sw(2, 2);
        sw(0, 0) = gc.computed(1, 1);
        sw(1, 1) = gc.computed(0, 0);
        sw(0, 1) = gc.computed(1, 0);
        sw(1, 0) = gc.computed(0, 1);
        bool direct = gc.computed == gc.expected;
        gc.swapped = !direct && sw == gc.expected;
        gc.match = (direct || gc.swapped) && gc.det == gc.expected_det;
        out.push_back(std::move(gc));
    }
    return out;
}

Report intersection_report() {
    Report rep{"intersections"};
    json arr = json::array();
    for (const auto& gc : intersection_suite()) {
        rep.line(gc.id + (gc.n != 12 ? " (n=" + std::to_string(gc.n) + ")" : "") + ": " + mat_str(gc.computed) + ", det " +
                 str(gc.det) + " [" + gc.vectors + " vectors" + (gc.swapped ? ", printed in the other order" : "") + "]");
        if (gc.vectors != "recomputed/recomputed")
            rep.line("  from recomputed projections: " + mat_str(gc.recomputed) + ", det " + str(gc.recomputed_det));
        if (!gc.match)
            rep.fail(gc.id + ": computed " + mat_str(gc.computed) + " det " + str(gc.det) + ", printed " + mat_str(gc.expected) +
                     " det " + str(gc.expected_det));
        arr.push_back({{"id", gc.id}, {"n", gc.n}, {"gram", mat_json(gc.computed)}, {"det", str(gc.det)},
                       {"recomputed_gram", mat_json(gc.recomputed)}, {"recomputed_det", str(gc.recomputed_det)},
                       {"vectors", gc.vectors}, {"swapped", gc.swapped}, {"match", gc.match}});
    }
    rep.data["grams"] = arr;
    return rep;
}

spectral::PairTest bt_pair_test(int n) {
    static std::mutex mu;
    static std::map<int, spectral::PairTest> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const std::string label = modules().at("tt").at("mult2").get<std::string>();
    auto x = spectral::normalized(spectral::project(spectral::base_vector('b', n), spectral::row('b', n, label)));
    const auto& rt = spectral::row('t', n, label);
    const auto& P = inv::suborbits(n, "bt");
    std::optional<OrbitSumVec> y;
    // cells fixed by beta project to zero on the minus part; any nonzero image spans the fixed line
    for (int id : P.ids) {
        auto p = spectral::project(spectral::cell_vector(n, 'b', 't', id), rt);
        if (std::any_of(p.coords.begin(), p.coords.end(), [](const Rat& q) { return q != 0; })) {
            y = p;
            break;
        }
    }
    if (!y) throw std::runtime_error("no bitransposition orbit reaches the minus part at degree " + std::to_string(n));
    auto t = spectral::pair_det_test(x, *y);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, t).first->second;
}

// ---------------------------------------------------------------- dimensions

DecompositionReport dimension_report(int n) {
    const auto& dims = modules().at("dimensions");
    const auto ns = std::to_string(n);
    DecompositionReport d;
    d.n = n;
    const auto& base = dims.at("base").at(ns);
    auto rad = radical_report('t', n);
    const std::string mult2 = modules()["tt"]["mult2"].get<std::string>();
    bool shared = bt_pair_test(n).radical;
    std::vector<std::string> minus;
    for (const auto& c : modules()["tt"]["minus_constituents"]) minus.push_back(c.get<std::string>());
    std::size_t i = 0;
    for (const auto& r : dims.at("rows")) {
        std::string label = r.get<std::string>();
        int m = base.at(i).get<int>();
        bool in_minus = std::find(minus.begin(), minus.end(), label) != minus.end();
        bool radical = std::find(rad.zeros.begin(), rad.zeros.end(), label) != rad.zeros.end();
        if (in_minus && !radical && !(label == mult2 && shared)) ++m;
        auto lam = data::partition(label, n);
        d.rows.push_back(label);
        d.multiplicity.push_back(m);
        d.split.push_back(lam == data::conjugate(lam));
        d.total += Int(m) * specht::dim_specht(lam);
        d.expected.push_back(dims.at("expected_table").at(ns).at(i).get<std::string>());
        std::string cell = m == 1 && d.split.back() ? "1+1" : std::to_string(m);
        if (cell != d.expected.back())
            d.mismatches.push_back(label + " = " + data::partition_str(lam) + ": assembled " + cell + ", printed " + d.expected.back());
        ++i;
    }
    d.expected_total = dims.at("expected_totals").at(ns).get<long>();
    return d;
}

VReport v_report() {
    const int n = 12;
    VReport v;
    std::map<std::vector<int>, int> mult;
    std::map<std::vector<int>, std::string> name;
    auto add = [&](const std::string& label) {
        auto lam = data::partition(label, n);
        name.emplace(lam, data::partition_str(lam));
        ++mult[lam];
    };
    auto has = [&](const std::string& label) { return mult.count(data::partition(label, n)) > 0; };
    // axes of type 2^2
    auto bb = radical_report('b', n);
    for (const auto& label : spectral::constituents('b', n)) {
        int k = copies('b', n, label);
        if (k == 1 && std::find(bb.zeros.begin(), bb.zeros.end(), label) != bb.zeros.end()) continue;
        if (k == 2 && bb.diagonal && bb.diagonal->rank < bb.diagonal->dim) k -= static_cast<int>((bb.diagonal->dim - bb.diagonal->rank) * k / bb.diagonal->dim);
        for (int c = 0; c < k; ++c) add(label);
    }
    // axes of type 2^6: a constituent already present is shared when the intersection test is degenerate
    auto grams = intersection_suite();
    auto degenerate = [&](const std::string& label, const std::string& pair) -> std::optional<bool> {
        for (const auto& g : grams) {
            auto sp = g.id.find(' ');
            if (g.n == n && g.id.substr(sp + 1) == pair && same_shape(g.id.substr(0, sp), label, n)) return g.det == 0;
        }
        return std::nullopt;
    };
    auto ss = radical_report('s', n);
    for (const auto& label : spectral::constituents('s', n)) {
        if (std::find(ss.zeros.begin(), ss.zeros.end(), label) != ss.zeros.end()) continue;
        if (has(label)) {
            auto d = degenerate(label, "b/s");
            if (!d) throw std::logic_error("no b/s intersection test for " + label);
            if (*d) continue;
        }
        add(label);
    }
    // minus part of the 3-axes
    auto tt = radical_report('t', n);
    const std::string mult2 = modules()["tt"]["mult2"].get<std::string>();
    for (const auto& label : spectral::constituents('t', n)) {
        if (std::find(tt.zeros.begin(), tt.zeros.end(), label) != tt.zeros.end()) continue;
        if (has(label)) {
            bool d = label == mult2 ? bt_pair_test(n).radical : degenerate(label, "s/t").value_or(false);
            if (d) continue;
        }
        add(label);
    }
    for (const auto& [lam, m] : mult) {
        v.constituents.emplace_back(name[lam], m);
        v.total += Int(m) * specht::dim_specht(lam);
    }
    const auto& dims = modules().at("dimensions");
    v.expected = dims.at("expected_v").get<long>();
    std::map<std::vector<int>, int> want;
    for (const auto& [k, m] : dims.at("expected_v12").items()) want[data::partition(k, n)] = m.get<int>();
    for (const auto& [lam, m] : want)
        if (mult[lam] != m)
            v.mismatches.push_back(data::partition_str(lam) + ": assembled " + std::to_string(mult[lam]) + ", printed " + std::to_string(m));
    for (const auto& [lam, m] : mult)
        if (!want.count(lam)) v.mismatches.push_back(data::partition_str(lam) + ": assembled " + std::to_string(m) + ", not printed");
    return v;
}

Report dimension_suite() {
    Report rep{"dimensions"};
    const auto& dims = modules().at("dimensions");
    json per_n = json::object();
    Int w8 = 0;
    for (int n = 8; n <= 12; ++n) {
        auto d = dimension_report(n);
        if (n == 8) w8 = d.total;
        std::string cells;
        for (std::size_t i = 0; i < d.rows.size(); ++i)
            cells += (i ? " " : "") + (d.multiplicity[i] == 1 && d.split[i] ? std::string("1+1") : std::to_string(d.multiplicity[i]));
        auto t = bt_pair_test(n);
        rep.line("n=" + std::to_string(n) + ": multiplicities " + cells + ", total " + d.total.get_str() + " (printed " +
                 d.expected_total.get_str() + "); b/t det " + str(t.det));
        for (const auto& m : d.mismatches) rep.line("  table cell differs: " + m);
        if (d.total != d.expected_total) rep.fail("n=" + std::to_string(n) + ": total " + d.total.get_str() + ", want " + d.expected_total.get_str());
        per_n[std::to_string(n)] = {{"multiplicities", d.multiplicity}, {"total", d.total.get_str()}, {"cell_mismatches", d.mismatches}};
    }
    auto v = v_report();
    std::string cs;
    for (const auto& [l, m] : v.constituents) cs += (cs.empty() ? "" : ", ") + l + (m > 1 ? " x" + std::to_string(m) : "");
    rep.line("V: " + cs + "; dim " + v.total.get_str());
    for (const auto& m : v.mismatches) rep.line("  table cell differs: " + m);
    if (v.total != v.expected) rep.fail("dim V = " + v.total.get_str() + ", want " + v.expected.get_str());
    const auto& a8 = dims.at("a8");
    Int extra = specht::dim_specht(data::partition(a8.at("extra_shape").get<std::string>(), 8));
    Int lhs = w8 + extra;
    rep.line("degree 8: " + w8.get_str() + " + " + extra.get_str() + " = " + lhs.get_str());
    if (w8 != a8.at("w_circ").get<long>() || lhs != a8.at("w_dim").get<long>())
        rep.fail("degree 8 identity: " + w8.get_str() + " + " + extra.get_str() + " != " + std::to_string(a8.at("w_dim").get<long>()));
    rep.data["per_n"] = per_n;
    rep.data["v"] = {{"dim", v.total.get_str()}, {"cell_mismatches", v.mismatches}};
    return rep;
}

}  // namespace axc::decomp
