// SPDX-License-Identifier: MIT
// Specht modules inside the tabloid module, with the sign-twisted action for S^lambda' (x) A.
#pragma once

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "axc/exactlin.hpp"
#include "axc/permgroup.hpp"

namespace axc::specht {

using Shape = std::vector<int>;

Int dim_specht(const Shape& lambda);
bool is_partition(const Shape& lambda);

struct Tableau {
    std::vector<std::vector<int>> rows;  // 1-based points
    Shape shape() const;
    int n() const;
    std::string str() const;  // "1 2 3 / 4 5 / 6"
    // rows from configuration: integers, "a..n" expanded in place, "a..n/" as singleton rows
    static Tableau from_json(const nlohmann::json& rows, int n);
};

// Tabloid: row index of each point, 4 bits per point.
using TabloidKey = std::uint64_t;
TabloidKey tabloid_key(const Tableau& t);
TabloidKey act(TabloidKey k, const Perm& g);
int row_of(TabloidKey k, int point);
// bar notation: rows after the first, "|" between rows, e.g. "8,6" or "6|8"
std::string bar(TabloidKey k, int n, int nrows);
TabloidKey parse_bar(const std::string& s, const Shape& shape);

// Integral combination of tabloids, sorted by key, no zero entries.
struct SpechtVec {
    Shape shape;  // shape of the tabloids (lambda' when twisted)
    int n = 0;
    bool twisted = false;
    std::vector<std::pair<TabloidKey, long long>> terms;

    bool is_zero() const { return terms.empty(); }
    SpechtVec act(const Perm& g) const;  // times sign(g) when twisted
    Int kappa(const SpechtVec& o) const;
    long long coef(TabloidKey k) const;
    SpechtVec& operator+=(const SpechtVec& o);
    SpechtVec scaled(long long c) const;
    bool operator==(const SpechtVec& o) const { return twisted == o.twisted && shape == o.shape && terms == o.terms; }
    std::string str() const;  // "+86 +12 -16 -82" in bar notation
    SparseVec sparse() const;  // keyed by tabloid key
};

SpechtVec polytabloid(const Tableau& t, bool twisted);
// Sum of v^g over the group given by a transversal chain (see transversal_chain).
SpechtVec orbit_sum(const SpechtVec& v, const std::vector<std::vector<Perm>>& chain);
SpechtVec invariant_vector(const Tableau& seed, bool twisted, const GenSet& group);

// A seed whose invariant vector is nonzero; tries seeded random fillings of the smaller of lambda, lambda'.
struct Seed {
    Tableau tableau;
    bool twisted = false;
    int attempts = 0;
};
Seed auto_seed(const Shape& lambda, const GenSet& group, unsigned rng_seed = 20240601u, int max_attempts = 64);

// rank of the span of all polytabloids of shape lambda (small lambda only)
std::size_t polytabloid_span_rank(const Shape& lambda);

// Section nine: w_n in S^(6,1^(n-6)) (x) A, the listed bases and their relations.
SpechtVec w_n(int n);
struct DipendentiReport {
    int n = 0;
    std::size_t listed = 0, claimed = 0, rank = 0;
    std::size_t family_size = 0, family_rank = 0;  // all w_n^g with <e_1^g> in the stated orbitals
    Int dim = 0;
    std::vector<std::string> lines, failures;
    bool ok() const { return failures.empty(); }
};
DipendentiReport dipendenti_suite(int n);

}  // namespace axc::specht
