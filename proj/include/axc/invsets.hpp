// SPDX-License-Identifier: MIT
// Classes X_b, X_s, X_r, X_t of S_n, their suborbits, the beta involution and inner-product values.
#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "axc/exactlin.hpp"
#include "axc/permgroup.hpp"

namespace axc::inv {

// kinds: 'b' (2^2), 's' (2^6, n = 12), 'r' (3), 't' (subgroups generated by a 3^2 element)
CycleType kind_cycle_type(char kind);
// r, t: lexicographically least generator of <p>; b, s: p itself
Perm canonical(char kind, const Perm& p);

struct ClassSet {
    int n = 0;
    char kind = 'b';
    std::vector<Perm> points;  // sorted
    std::unordered_map<std::uint64_t, int> index;

    int size() const { return static_cast<int>(points.size()); }
    int find(const Perm& p) const;  // canonical payload; -1 if absent
};

// Cached; throws std::invalid_argument for kind s with n != 12 or n outside 8..12.
const ClassSet& class_set(int n, char kind);

Perm base_point(char kind, int n);
GenSet stabilizer(char kind, int n);  // centralizer for b, s; normalizer for t

// Orbits of the stabilizer of the base of `pair[0]` on the class `pair[1]`.
// Pairs: bb, ss, sb, st, bt, tt.
struct Partition {
    int n = 0;
    std::string pair;
    std::vector<int> label;               // target point index -> orbital id (1-based)
    std::vector<std::vector<int>> cells;  // cells[id-1]: target point indices, BFS order
    std::vector<Perm> reps;               // configured representative of each orbital, at degree n
    std::vector<int> ids;                 // configured ids present at degree n (1..r)
    std::map<int, int> alias;             // id -> earlier id naming the same S_n-orbital

    int count() const { return static_cast<int>(ids.size()); }
    int primary(int id) const { auto it = alias.find(id); return it == alias.end() ? id : it->second; }
    std::vector<long> valencies() const;
};

// Cached. Throws std::runtime_error if the configured representatives fail to label the orbits
// one-to-one (a data-entry problem).
const Partition& suborbits(int n, const std::string& pair);

// Orbital of (u, v) where u has kind pair[0] and v kind pair[1]; reversed pairs are accepted.
int classify(int n, char ku, const Perm& u, char kv, const Perm& v);

// Splitting of an orbital under the even part of the stabilizer.
struct Refinement {
    int id = 0;
    bool splits = false;
    std::vector<int> half_of;  // per point in the cell (same order), 0 or 1
    long sizes[2] = {0, 0};
    std::vector<std::string> variants;  // configured variant labels, in the half they land
};
Refinement even_refinement(int n, const std::string& pair, int id);

// beta: <ab> -> <ab^-1> on X_t
Perm beta(const Perm& t);
std::map<int, int> beta_pairing(int n);

// Inner-product value on an orbital; pair as above (or reversed).
Rat gamma(const std::string& pair, int id);
Rat gamma_of(int n, char ku, const Perm& u, char kv, const Perm& v);
std::string shape(const std::string& pair, int id);  // bb, ss, sb only
Rat shape_gamma(const std::string& shape);
Rat u_norm();

struct SelfCheck {
    std::vector<std::string> lines;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
// Labels every configured representative at every n, compares valencies with the configured table.
SelfCheck self_check();

// Recomputes an inner product (a_x, u_c) for the listed cases, from dihedral expansions only.
// pair is "st" (x = s_1) or "bt" (x = r_1); c is an orbital id of that pair.
struct GammaRecompute {
    Rat value;
    std::vector<std::string> trace;
};
GammaRecompute recompute_gamma_entry(const std::string& pair, int id);

}  // namespace axc::inv
