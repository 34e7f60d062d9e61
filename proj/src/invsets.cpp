// SPDX-License-Identifier: MIT
#include "axc/invsets.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "axc/data.hpp"

namespace axc::inv {

namespace {

std::mutex g_mu;

const data::json& orbital_table(const std::string& pair) { return data::get("classes.json").at("orbitals").at(pair); }

void check_degree(int n, char kind) {
    if (n < 8 || n > 12) throw std::invalid_argument("degree must be in 8..12");
    if (kind == 's' && n != 12) throw std::invalid_argument("class s exists only for n = 12");
}

// the stored pair for a kind combination, and whether the slots are swapped
std::pair<std::string, bool> stored_pair(char a, char b) {
    static const std::set<std::string> stored = {"bb", "ss", "sb", "st", "bt", "tt"};
    std::string p{a, b};
    if (stored.count(p)) return {p, false};
    std::string q{b, a};
    if (stored.count(q)) return {q, true};
    throw std::invalid_argument("unsupported pair kind " + p);
}

std::vector<int> moved_points(const Perm& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.degree(); ++i)
        if (p.image(i) != i) out.push_back(i);
    return out;
}

// Moves the points a representative uses outside the base support down to the least free ones.
// Sound because the base stabilizer contains the full symmetric group on those points.
std::optional<Perm> compress(const Perm& rep12, const Perm& base12, int n) {
    std::vector<bool> in_base(13, false);
    for (int x : moved_points(base12)) in_base[x] = true;
    std::vector<int> outside;
    for (int x = 1; x <= 12; ++x)
        if (!in_base[x]) outside.push_back(x);
    std::vector<int> used;
    for (int x : moved_points(rep12))
        if (!in_base[x]) used.push_back(x);
    std::vector<int> img(12);
    for (int x = 1; x <= 12; ++x) img[x - 1] = x;
    std::vector<bool> taken(13, false);
    for (std::size_t k = 0; k < used.size(); ++k) {
        img[used[k] - 1] = outside[k];
        taken[outside[k]] = true;
    }
    // complete to a bijection on the outside points
    std::vector<int> free_targets;
    for (int x : outside)
        if (!taken[x]) free_targets.push_back(x);
    std::size_t f = 0;
    for (int x : outside)
        if (std::find(used.begin(), used.end(), x) == used.end()) img[x - 1] = free_targets[f++];
    Perm g(12, img);
    Perm r = conj(rep12, g);
    if (r.support_max() > n) return std::nullopt;
    return Perm::parse(r.str(), n);
}

}  // namespace

CycleType kind_cycle_type(char kind) {
    switch (kind) {
    case 'b': return parse_cycle_type("2^2");
    case 's': return parse_cycle_type("2^6");
    case 'r': return parse_cycle_type("3");
    case 't': return parse_cycle_type("3^2");
    }
    throw std::invalid_argument(std::string("unknown kind ") + kind);
}

Perm canonical(char kind, const Perm& p) {
    if (kind == 'r' || kind == 't') {
        Perm q = p.inverse();
        return q < p ? q : p;
    }
    return p;
}

int ClassSet::find(const Perm& p) const {
    auto it = index.find(p.key());
    return it == index.end() ? -1 : it->second;
}

const ClassSet& class_set(int n, char kind) {
    check_degree(n, kind);
    static std::map<std::pair<int, char>, std::unique_ptr<ClassSet>> cache;
    std::lock_guard<std::mutex> lock(g_mu);
    auto& slot = cache[{n, kind}];
    if (!slot) {
        auto cs = std::make_unique<ClassSet>();
        cs->n = n;
        cs->kind = kind;
        for (const auto& p : enumerate_cycle_type(n, kind_cycle_type(kind)))
            if (canonical(kind, p) == p) cs->points.push_back(p);
        std::sort(cs->points.begin(), cs->points.end());
        for (std::size_t i = 0; i < cs->points.size(); ++i) cs->index.emplace(cs->points[i].key(), static_cast<int>(i));
        slot = std::move(cs);
    }
    return *slot;
}

Perm base_point(char kind, int n) {
    if (kind == 'r') return Perm::parse("(1,2,3)", n);
    return Perm::parse(data::get("classes.json").at("bases").at(std::string(1, kind)).get<std::string>(), n);
}

GenSet stabilizer(char kind, int n) {
    check_degree(n, kind);
    Perm b = base_point(kind, n);
    GenSet g = kind == 't' ? normalizer_e1_gens(n) : centralizer_gens(b);
    bool ok = kind == 't' ? validate_normalizes(g, b) : validate_centralizes(g, b);
    if (!ok) throw std::logic_error("stabilizer generators fail validation for " + g.label);
    return g;
}

std::vector<long> Partition::valencies() const {
    std::vector<long> v;
    for (int id : ids) v.push_back(static_cast<long>(cells[id - 1].size()));
    return v;
}

namespace {

std::unique_ptr<Partition> build_partition(int n, const std::string& pair) {
    char kb = pair[0], kt = pair[1];
    check_degree(n, kb);
    check_degree(n, kt);
    const ClassSet& X = class_set(n, kt);
    GenSet H = stabilizer(kb, n);
    std::vector<int> cell_of(X.size(), -1);
    std::vector<std::vector<int>> raw;
    for (int start = 0; start < X.size(); ++start) {
        if (cell_of[start] >= 0) continue;
        int c = static_cast<int>(raw.size());
        raw.push_back({start});
        cell_of[start] = c;
        for (std::size_t i = 0; i < raw[c].size(); ++i)
            for (const auto& h : H.gens) {
                int j = X.find(canonical(kt, conj(X.points[raw[c][i]], h)));
                if (j < 0) throw std::logic_error("class not closed under conjugation");
                if (cell_of[j] < 0) {
                    cell_of[j] = c;
                    raw[c].push_back(j);
                }
            }
    }
    auto P = std::make_unique<Partition>();
    P->n = n;
    P->pair = pair;
    Perm base12 = base_point(kb, 12);
    const auto& reps = orbital_table(pair).at("reps");
    int max_id = 0;
    for (const auto& r : reps) max_id = std::max(max_id, r.at("id").get<int>());
    P->cells.resize(max_id);
    P->reps.resize(max_id);
    std::vector<int> id_of_cell(raw.size(), 0);
    std::vector<int> cell_of_id(max_id + 1, -1);
    for (const auto& r : reps) {
        int id = r.at("id").get<int>();
        auto rep = compress(Perm::parse(r.at("rep").get<std::string>(), 12), base12, n);
        if (!rep) continue;
        int j = X.find(canonical(kt, *rep));
        if (j < 0) throw std::runtime_error(pair + " representative " + rep->str() + " is not in the class");
        int c = cell_of[j];
        if (cell_of_id[id] >= 0) {
            // a second representative (A_n variant) of an orbital already labelled
            if (cell_of_id[id] != c)
                throw std::runtime_error(pair + " variants of orbital " + std::to_string(id) + " lie in different orbits");
            continue;
        }
        cell_of_id[id] = c;
        if (id_of_cell[c] != 0) {
            // same S_n-orbital as an earlier id; kept as an alias and checked against the A_n splitting
            P->alias[id] = id_of_cell[c];
            P->reps[id - 1] = *rep;
            continue;
        }
        id_of_cell[c] = id;
        P->reps[id - 1] = *rep;
        P->ids.push_back(id);
    }
    for (std::size_t c = 0; c < raw.size(); ++c)
        if (id_of_cell[c] == 0)
            throw std::runtime_error(pair + " at n = " + std::to_string(n) + ": orbit of " + X.points[raw[c][0]].str() +
                                     " has no configured representative");
    std::sort(P->ids.begin(), P->ids.end());
    P->label.resize(X.size());
    for (std::size_t c = 0; c < raw.size(); ++c) {
        P->cells[id_of_cell[c] - 1] = raw[c];
        for (int j : raw[c]) P->label[j] = id_of_cell[c];
    }
    return P;
}

}  // namespace

const Partition& suborbits(int n, const std::string& pair) {
    static std::map<std::pair<int, std::string>, std::unique_ptr<Partition>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, pair});
        if (it != cache.end()) return *it->second;
    }
    auto P = build_partition(n, pair);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, pair}];
    if (!slot) slot = std::move(P);
    return *slot;
}

int classify(int n, char ku, const Perm& u, char kv, const Perm& v) {
    auto [pair, swapped] = stored_pair(ku, kv);
    const Perm& x = swapped ? v : u;
    const Perm& y = swapped ? u : v;
    char kx = pair[0], ky = pair[1];
    auto g = conjugator(x, base_point(kx, n));
    if (!g) throw std::invalid_argument(x.str() + " is not in class " + std::string(1, kx));
    const Partition& P = suborbits(n, pair);
    int j = class_set(n, ky).find(canonical(ky, conj(y, *g)));
    if (j < 0) throw std::invalid_argument(y.str() + " is not in class " + std::string(1, ky));
    return P.label[j];
}

Refinement even_refinement(int n, const std::string& pair, int id) {
    const Partition& P = suborbits(n, pair);
    const ClassSet& X = class_set(n, pair[1]);
    GenSet H = stabilizer(pair[0], n);
    const auto& cell = P.cells.at(id - 1);
    Refinement r;
    r.id = id;
    if (cell.empty()) return r;
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < cell.size(); ++i) pos[cell[i]] = static_cast<int>(i);
    // states (point, parity of the conjugating element)
    std::vector<std::array<bool, 2>> seen(cell.size(), {false, false});
    std::vector<std::pair<int, int>> queue{{0, 0}};
    seen[0][0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [i, par] = queue[q];
        for (const auto& h : H.gens) {
            int j = X.find(canonical(pair[1], conj(X.points[cell[i]], h)));
            int k = pos.at(j);
            int p2 = par ^ (h.sign() < 0 ? 1 : 0);
            if (!seen[k][p2]) {
                seen[k][p2] = true;
                queue.push_back({k, p2});
            }
        }
    }
    r.half_of.resize(cell.size());
    r.splits = !seen[0][1];
    for (std::size_t i = 0; i < cell.size(); ++i) {
        r.half_of[i] = r.splits && !seen[i][0] ? 1 : 0;
        ++r.sizes[r.half_of[i]];
    }
    Perm base12 = base_point(pair[0], 12);
    for (const auto& rep : orbital_table(pair).at("reps")) {
        int rid = rep.at("id").get<int>();
        if (rid != id && !(P.alias.count(rid) && P.alias.at(rid) == id)) continue;
        auto p = compress(Perm::parse(rep.at("rep").get<std::string>(), 12), base12, n);
        if (!p) continue;
        int k = pos.at(X.find(canonical(pair[1], *p)));
        std::string v = rep.value("variant", "");
        if (rid != id) v = "id" + std::to_string(rid);
        r.variants.push_back((v.empty() ? "plain" : v) + ":" + std::to_string(r.half_of[k]));
    }
    return r;
}

Perm beta(const Perm& t) {
    auto cs = t.cycles();
    if (cs.size() != 2 || cs[0].size() != 3 || cs[1].size() != 3) throw std::invalid_argument("beta needs a 3^2 element");
    Perm a = Perm::cycle(t.degree(), cs[0]);
    Perm b = Perm::cycle(t.degree(), cs[1]);
    return canonical('t', compose(a, b.inverse()));
}

std::map<int, int> beta_pairing(int n) {
    const Partition& P = suborbits(n, "tt");
    Perm e1 = base_point('t', n);
    std::map<int, int> out;
    for (int id : P.ids) out[id] = classify(n, 't', e1, 't', beta(P.reps[id - 1]));
    return out;
}

Rat shape_gamma(const std::string& s) {
    return parse_rat(data::get("classes.json").at("shape_gamma").at(s).get<std::string>());
}

Rat u_norm() { return parse_rat(data::get("classes.json").at("u_norm").get<std::string>()); }

std::string shape(const std::string& pair, int id) {
    std::string p = pair == "bs" ? "sb" : pair;
    for (const auto& r : orbital_table(p).at("reps"))
        if (r.at("id").get<int>() == id && r.contains("shape")) return r.at("shape").get<std::string>();
    throw std::out_of_range("no shape for " + pair + " orbital " + std::to_string(id));
}

Rat gamma(const std::string& pair, int id) {
    auto [p, swapped] = stored_pair(pair[0], pair[1]);
    (void)swapped;
    for (const auto& r : orbital_table(p).at("reps")) {
        if (r.at("id").get<int>() != id) continue;
        if (r.contains("gamma")) return parse_rat(r.at("gamma").get<std::string>());
        return shape_gamma(r.at("shape").get<std::string>());
    }
    throw std::out_of_range("unknown orbital " + pair + " " + std::to_string(id));
}

Rat gamma_of(int n, char ku, const Perm& u, char kv, const Perm& v) {
    std::string pair{ku, kv};
    return gamma(pair, classify(n, ku, u, kv, v));
}

SelfCheck self_check() {
    SelfCheck sc;
    const auto& cls = data::get("classes.json");
    const auto& mods = data::get("modules.json");
    auto fail = [&](const std::string& s) { sc.failures.push_back(s); };
    auto line = [&](const std::string& s) { sc.lines.push_back(s); };

    struct Want { char k; int n; long size; };
    for (auto w : {Want{'b', 12, 1485}, Want{'s', 12, 10395}, Want{'r', 12, 220}, Want{'t', 12, 18480}}) {
        long got = class_set(w.n, w.k).size();
        line(std::string("|X_") + w.k + "| = " + std::to_string(got));
        if (got != w.size) fail(std::string("|X_") + w.k + "| = " + std::to_string(got) + ", want " + std::to_string(w.size));
    }
    for (const std::string pair : {"bb", "ss", "sb", "st", "bt", "tt"}) {
        for (int n = 8; n <= 12; ++n) {
            if ((pair[0] == 's' || pair[1] == 's') && n != 12) continue;
            try {
                const Partition& P = suborbits(n, pair);
                long total = 0;
                for (long k : P.valencies()) total += k;
                line(pair + " n=" + std::to_string(n) + ": " + std::to_string(P.count()) + " orbitals, sizes sum " +
                     std::to_string(total));
                if (total != class_set(n, pair[1]).size()) fail(pair + " sizes do not sum to the class size");
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
    }
    for (const auto& [ns, cnt] : cls.at("tt_orbital_count").items()) {
        int n = std::stoi(ns);
        int got = suborbits(n, "tt").count();
        if (got != cnt.get<int>()) fail("tt orbital count at n=" + ns + " is " + std::to_string(got));
    }
    for (const auto& [ns, col] : cls.at("tt_valency").items()) {
        int n = std::stoi(ns);
        auto k = suborbits(n, "tt").valencies();
        std::size_t m = std::min(k.size(), col.size());
        for (std::size_t i = 0; i < m; ++i)
            if (k[i] != col[i].get<long>())
                fail("k_" + std::to_string(i + 1) + "(" + ns + ") = " + std::to_string(k[i]) + ", configured " +
                     std::to_string(col[i].get<long>()));
        if (col.size() != k.size())
            line("k(" + ns + ") configured column has " + std::to_string(col.size()) + " of " + std::to_string(k.size()) +
                 " entries; compared the listed ones");
    }
    auto ss = suborbits(12, "ss").valencies();
    const auto& row = mods.at("ss").at("expected_rows").at("12");
    for (std::size_t i = 0; i < ss.size(); ++i)
        if (parse_rat(row[i].get<std::string>()) != ss[i]) fail("ss valency " + std::to_string(i + 1) + " mismatch");
    // A_12 splittings named by the variants
    std::vector<std::pair<std::string, int>> splits = {{"ss", 5}, {"ss", 9}, {"ss", 11}, {"tt", 30}};
    for (const std::string pair : {"st", "bt", "sb"})
        for (auto [a, b] : suborbits(12, pair).alias) {
            line(pair + " representative " + std::to_string(a) + " is S_12-conjugate to " + std::to_string(b));
            splits.push_back({pair, b});
        }
    for (auto [pair, id] : splits) {
        auto r = even_refinement(12, pair, id);
        std::string v;
        for (const auto& s : r.variants) v += " " + s;
        line(pair + " " + std::to_string(id) + (r.splits ? " splits " : " does not split ") + std::to_string(r.sizes[0]) +
             "+" + std::to_string(r.sizes[1]) + ";" + v);
        std::set<std::string> halves;
        for (const auto& s : r.variants) halves.insert(s.substr(s.find(':')));
        if (!r.splits || halves.size() != 2) fail(pair + " " + std::to_string(id) + ": variants do not separate the A_12 halves");
    }
    return sc;
}

}  // namespace axc::inv
