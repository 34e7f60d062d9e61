// SPDX-License-Identifier: MIT
#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "axc/data.hpp"
#include "axc/invsets.hpp"
#include "axc/spectral.hpp"

namespace axc::cli {

using decomp::Report;
using nlohmann::json;

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"norton-sakuma", decomp::norton_sakuma_report},
        {"classes", decomp::classes_report},
        {"gamma", decomp::gamma_report},
        {"eigenmatrix", decomp::eigenmatrix_report},
        {"projections", decomp::projection_report},
        {"radicals", decomp::radical_suite},
        {"shape", decomp::shape_report},
        {"intersections", decomp::intersection_report},
        {"dimensions", decomp::dimension_suite},
        {"dipendenti", decomp::dipendenti_report},
        {"udependent", decomp::udependent_suite},
        {"appendix", decomp::appendix_gram_check},
    };
    return all;
}

std::vector<Report> run_suites(const std::vector<std::string>& names, unsigned jobs) {
    std::vector<const Suite*> todo;
    for (const auto& n : names) {
        auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == n; });
        if (it == suites().end()) throw std::invalid_argument("unknown suite " + n);
        todo.push_back(&*it);
    }
    std::vector<Report> out(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) {
            try {
                out[i] = todo[i]->run();
            } catch (const std::exception& e) {
                out[i] = Report{todo[i]->name};
                out[i].fail(std::string("exception: ") + e.what());
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(todo.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string render(const Table& t, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j{{"schema", kSchemaVersion}, {"table", t.name}, {"columns", t.header}, {"rows", t.rows}};
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
            os << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
    } else {
        os << "### " << t.name << "\n\n|";
        for (const auto& h : t.header) os << " " << h << " |";
        os << "\n|";
        for (std::size_t i = 0; i < t.header.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& r : t.rows) {
            os << "|";
            for (const auto& c : r) os << " " << c << " |";
            os << "\n";
        }
    }
    return os.str();
}

namespace {

struct Options {
    std::string format = "md";
    std::string out;
    int n = 12;
    std::string kind;
    std::string lambda;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

std::vector<std::string> id_header(const inv::Partition& P) {
    std::vector<std::string> h;
    for (int id : P.ids) h.push_back(std::to_string(id));
    return h;
}

std::vector<std::string> strs(const std::vector<Rat>& v) {
    std::vector<std::string> s;
    for (const auto& q : v) s.push_back(str(q));
    return s;
}

char class_kind(const std::string& kind) {
    if (kind.size() != 1 || std::string("bst").find(kind[0]) == std::string::npos)
        throw CLI::ValidationError("--kind", "expected b, s or t");
    return kind[0];
}

Table eigenmatrix_table(char kind, int n) {
    const auto& P = inv::suborbits(n, spectral::pair_of(kind));
    Table t{std::string(1, kind) + " eigenmatrix, n=" + std::to_string(n), {"lambda", "dim"}, {}};
    for (auto& h : id_header(P)) t.header.push_back(h);
    const auto& diag = data::get("modules.json")["bb"]["mult2_diagonal"];
    for (const auto& label : spectral::constituents(kind, n)) {
        int copies = kind == 'b' && n == 12 && diag.contains(label) ? static_cast<int>(diag[label].size()) : 1;
        for (int c = 1; c <= copies; ++c) {
            const auto& r = spectral::row(kind, n, label, c);
            std::vector<std::string> line{data::partition_str(r.lambda), r.dim.get_str()};
            if (copies > 1) line[0] += " copy " + std::to_string(c);
            for (const auto& v : r.values) line.push_back(str(v));
            t.rows.push_back(std::move(line));
        }
    }
    return t;
}

Table named_table(const std::string& name, const Options& o) {
    if (name == "fe") return eigenmatrix_table('s', 12);
    if (name == "eigenmatrix") return eigenmatrix_table(class_kind(o.kind.empty() ? "s" : o.kind), o.n);
    if (name == "valencies") {
        std::string pair = o.kind.empty() ? "tt" : o.kind;
        const auto& P = inv::suborbits(o.n, pair);
        Table t{pair + " valencies, n=" + std::to_string(o.n), {"orbital", "representative", "k"}, {}};
        auto k = P.valencies();
        for (std::size_t i = 0; i < P.ids.size(); ++i)
            t.rows.push_back({std::to_string(P.ids[i]), P.reps[i].str(), std::to_string(k[i])});
        return t;
    }
    if (name == "gamma") {
        std::string pair = o.kind.empty() ? "st" : o.kind;
        const auto& P = inv::suborbits(12, pair);
        Table t{pair + " inner products", {"orbital", "representative", "gamma"}, {}};
        for (std::size_t i = 0; i < P.ids.size(); ++i)
            t.rows.push_back({std::to_string(P.ids[i]), P.reps[i].str(), str(inv::gamma(pair, P.ids[i]))});
        return t;
    }
    if (name == "dimensions") {
        Table t{"multiplicities in W", {"lambda"}, {}};
        std::vector<decomp::DecompositionReport> reps;
        for (int n = 8; n <= 12; ++n) {
            reps.push_back(decomp::dimension_report(n));
            t.header.push_back("n=" + std::to_string(n));
        }
        for (std::size_t i = 0; i < reps[0].rows.size(); ++i) {
            std::vector<std::string> line{reps[0].rows[i]};
            for (const auto& r : reps)
                line.push_back(r.multiplicity[i] == 1 && r.split[i] ? "1+1" : std::to_string(r.multiplicity[i]));
            t.rows.push_back(std::move(line));
        }
        std::vector<std::string> tot{"dim"};
        for (const auto& r : reps) tot.push_back(r.total.get_str());
        t.rows.push_back(std::move(tot));
        return t;
    }
    if (name == "shape") {
        Table t{"shape candidates", {"2^2 orbital", "3A/3C", "3A/3C", "f(6^2)", "f(2^6)", "admissible"}, {}};
        for (const auto& r : decomp::shape_scan())
            t.rows.push_back({r.x, r.y, r.z, str(r.f_66), str(r.f_26), r.admissible ? "yes" : "no"});
        return t;
    }
    throw CLI::ValidationError("table", "unknown table " + name + " (fe, eigenmatrix, valencies, gamma, dimensions, shape)");
}

std::string render_reports(const std::vector<Report>& reps, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j{{"schema", kSchemaVersion}, {"reports", json::array()}};
        for (const auto& r : reps) j["reports"].push_back(r.to_json());
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        Table t{"verify", {"suite", "status", "failures"}, {}};
        for (const auto& r : reps) {
            std::string f;
            for (const auto& x : r.failures) f += (f.empty() ? "" : "; ") + x;
            t.rows.push_back({r.name, r.ok() ? "PASS" : "FAIL", f});
        }
        os << render(t, "csv");
    } else {
        for (const auto& r : reps) os << r.markdown() << "\n";
    }
    return os.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the axial algebra decomposition data"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--out", o.out, "write to this file instead of stdout");
    };

    std::string table_name;
    auto* tables = app.add_subcommand("tables", "print a table (fe, eigenmatrix, valencies, gamma, dimensions, shape)");
    tables->add_option("name", table_name)->required();
    tables->add_option("--n", o.n)->check(CLI::Range(8, 12));
    tables->add_option("--kind", o.kind, "class (b, s, t) or orbital pair (bb, ss, sb, st, bt, tt)");
    common(tables);

    std::vector<std::string> which;
    auto* verify = app.add_subcommand("verify", "run verification suites; 'all' runs every suite");
    verify->add_option("suite", which)->required();
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    common(verify);

    std::string u, v;
    auto* classify = app.add_subcommand("classify-pair", "orbital of a pair of class points");
    classify->add_option("u", u)->required();
    classify->add_option("v", v)->required();
    classify->add_option("--n", o.n)->check(CLI::Range(8, 12));
    classify->add_option("--kind", o.kind, "orbital pair, e.g. st")->required();
    common(classify);

    auto* eig = app.add_subcommand("eigenmatrix", "one row of the first eigenmatrix");
    eig->add_option("--n", o.n)->check(CLI::Range(8, 12));
    eig->add_option("--kind", o.kind, "b, s or t")->required();
    eig->add_option("--lambda", o.lambda)->required();
    int copy = 1;
    eig->add_option("--copy", copy)->check(CLI::Range(1, 2));
    common(eig);

    std::string group;
    int cell = 0;
    auto* proj = app.add_subcommand("project", "project a fixed vector onto an isotypic component");
    proj->add_option("--n", o.n)->check(CLI::Range(8, 12));
    proj->add_option("--kind", o.kind, "class of the vector: b, s or t")->required();
    proj->add_option("--lambda", o.lambda)->required();
    proj->add_option("--group", group, "base of the stabilizer (default: the class itself)");
    proj->add_option("--cell", cell, "orbit sum of this orbital instead of the base point");
    proj->add_option("--copy", copy)->check(CLI::Range(1, 2));
    common(proj);

    std::string what;
    auto* report = app.add_subcommand("report", "dimensions, radicals or v");
    report->add_option("what", what)->required()->check(CLI::IsMember({"dimensions", "radicals", "v"}));
    report->add_option("--n", o.n)->check(CLI::Range(8, 12));
    report->add_option("--kind", o.kind, "b, s or t (radicals)");
    common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (tables->parsed()) {
            emit(render(named_table(table_name, o), o.format), o, out);
            return kOk;
        }
        if (verify->parsed()) {
            std::vector<std::string> names;
            if (which.size() == 1 && which[0] == "all")
                for (const auto& s : suites()) names.push_back(s.name);
            else
                names = which;
            for (const auto& n : names)
                if (std::none_of(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == n; })) {
                    err << "unknown suite " << n << "; available:";
                    for (const auto& s : suites()) err << " " << s.name;
                    err << "\n";
                    return kUsage;
                }
            auto reps = run_suites(names, o.jobs);
            emit(render_reports(reps, o.format), o, out);
            bool ok = std::all_of(reps.begin(), reps.end(), [](const Report& r) { return r.ok(); });
            return ok ? kOk : kFailed;
        }
        if (classify->parsed()) {
            if (o.kind.size() != 2) throw CLI::ValidationError("--kind", "expected an orbital pair such as st");
            Perm pu = inv::canonical(o.kind[0], Perm::parse(u, o.n));
            Perm pv = inv::canonical(o.kind[1], Perm::parse(v, o.n));
            int id = inv::classify(o.n, o.kind[0], pu, o.kind[1], pv);
            Table t{"classify-pair", {"pair", "u", "v", "orbital", "gamma"}, {}};
            std::string g = o.n == 12 ? str(inv::gamma_of(o.n, o.kind[0], pu, o.kind[1], pv)) : "";
            t.rows.push_back({o.kind, pu.str(), pv.str(), std::to_string(id), g});
            emit(render(t, o.format), o, out);
            return kOk;
        }
        if (eig->parsed()) {
            const auto& r = spectral::row(class_kind(o.kind), o.n, o.lambda, copy);
            Table t{"row " + data::partition_str(r.lambda) + " (" + o.kind + ", n=" + std::to_string(o.n) + ")",
                    {"orbital", "value"}, {}};
            for (std::size_t j = 0; j < r.ids.size(); ++j) t.rows.push_back({std::to_string(r.ids[j]), str(r.values[j])});
            t.rows.push_back({"dim", r.dim.get_str()});
            t.rows.push_back({"f", str(spectral::f_lambda(r))});
            if (r.kind == 't') t.rows.push_back({"parity", spectral::str(spectral::beta_parity(r))});
            emit(render(t, o.format), o, out);
            return kOk;
        }
        if (proj->parsed()) {
            char cls = class_kind(o.kind);
            char grp = group.empty() ? cls : class_kind(group);
            spectral::OrbitSumVec x = cell ? spectral::cell_vector(o.n, grp, cls, cell)
                                           : (grp == cls ? spectral::base_vector(cls, o.n) : spectral::cell_vector(o.n, grp, cls, 1));
            auto p = spectral::project(x, spectral::row(cls, o.n, o.lambda, copy));
            Table t{"projection onto " + o.lambda, {"orbit", "coefficient"}, {}};
            for (std::size_t j = 0; j < p.ids.size(); ++j) t.rows.push_back({std::to_string(p.ids[j]), str(p.coords[j])});
            emit(render(t, o.format), o, out);
            return kOk;
        }
        if (report->parsed()) {
            Table t{what, {}, {}};
            bool ok = true;
            if (what == "dimensions") {
                auto d = decomp::dimension_report(o.n);
                t.name = "dimensions, n=" + std::to_string(o.n);
                t.header = {"lambda", "multiplicity", "printed"};
                for (std::size_t i = 0; i < d.rows.size(); ++i)
                    t.rows.push_back({data::partition_str(data::partition(d.rows[i], o.n)), d.multiplicity[i] == 1 && d.split[i] ? "1+1" : std::to_string(d.multiplicity[i]),
                                      i < d.expected.size() ? d.expected[i] : ""});
                t.rows.push_back({"total", d.total.get_str(), d.expected_total.get_str()});
                ok = d.total == d.expected_total;
                if (o.n == 12) {
                    auto vr = decomp::v_report();
                    t.rows.push_back({"V", vr.total.get_str(), vr.expected.get_str()});
                    ok = ok && vr.total == vr.expected;
                }
            } else if (what == "v") {
                auto vr = decomp::v_report();
                t.header = {"lambda", "multiplicity"};
                for (const auto& [l, m] : vr.constituents) t.rows.push_back({l, std::to_string(m)});
                t.rows.push_back({"dim", vr.total.get_str()});
                ok = vr.total == vr.expected;
            } else {
                char k = class_kind(o.kind.empty() ? "s" : o.kind);
                auto rr = decomp::radical_report(k, o.n);
                t.name = "f by constituent, " + std::string(1, k) + ", n=" + std::to_string(o.n);
                t.header = {"lambda", "f", "radical"};
                for (const auto& e : rr.entries) t.rows.push_back({e.label, str(e.f), e.f == 0 ? "yes" : "no"});
                ok = rr.negative.empty();
            }
            emit(render(t, o.format), o, out);
            return ok ? kOk : kFailed;
        }
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace axc::cli
