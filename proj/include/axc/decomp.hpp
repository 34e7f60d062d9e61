// SPDX-License-Identifier: MIT
// Radicals, the shape scan, intersection tests, dimension accounting, the section-nine relations
// and the Gram consistency check of the 4A odd axis.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "axc/exactlin.hpp"
#include "axc/spechtmod.hpp"
#include "axc/spectral.hpp"

namespace axc::decomp {

using nlohmann::json;

// Common result of every suite: free-form lines, failures, and a machine-readable payload.
struct Report {
    std::string name;
    std::vector<std::string> lines;
    std::vector<std::string> failures;
    json data = json::object();

    bool ok() const { return failures.empty(); }
    void line(const std::string& s) { lines.push_back(s); }
    void fail(const std::string& s) { failures.push_back(s); }
    std::string markdown() const;
    json to_json() const;
};

// --- tables ---

Report norton_sakuma_report();
Report classes_report();
Report eigenmatrix_report();
Report gamma_report();

// --- shape ---

struct ShapeScanResult {
    std::string x, y, z;    // 2A|2B, 3A|3C, 3A|3C
    std::vector<Rat> gamma; // on the ss orbitals
    Rat f_66, f_26;         // f for the rows (6^2) and (2^6)
    bool admissible = false;
};
std::vector<ShapeScanResult> shape_scan();
Report shape_report();

// --- radicals ---

// The form on the stabilizer-fixed vectors of one isotypic component; a radical submodule meets
// this space, so rank < dim exactly when the component has a radical.
struct FixedGram {
    std::string label;
    RatMatrix gram;
    std::size_t dim = 0, rank = 0;
    bool idempotent = false;  // the summed copy projections fix their image
};
FixedGram isotypic_fixed_gram(char kind, int n, const std::string& label);

struct RadicalEntry {
    std::string label;
    specht::Shape lambda;
    Rat f;
    spectral::Parity parity = spectral::Parity::neither;  // t only
};
struct RadicalReport {
    char kind = 's';
    int n = 12;
    std::vector<RadicalEntry> entries;
    std::vector<std::string> zeros;     // labels with f == 0
    std::vector<std::string> negative;  // f < 0 (must be empty)
    std::optional<FixedGram> diagonal;   // kind b: the component with two copies
};
RadicalReport radical_report(char kind, int n);
Report radical_suite();

// --- projections and intersections ---

struct ProjectionCheck {
    std::string id;
    int n = 12;
    spectral::OrbitSumVec input, computed;
    std::vector<std::optional<Rat>> expected;  // nullopt where the printed entry is unreadable
    bool match = false;
    bool printed_in_component = false;  // printed vector lies in the lambda-isotypic part
    std::string diagnosis;              // for mismatches: the cell, copy and scale that do match
    std::optional<spectral::OrbitSumVec> printed() const;
};
std::vector<ProjectionCheck> projection_suite();
Report projection_report();

struct GramCheck {
    std::string id;
    int n = 12;
    RatMatrix expected, computed;   // computed from the printed vectors when they are usable
    RatMatrix recomputed;           // from the recomputed projections
    Rat expected_det, det, recomputed_det;
    bool swapped = false;           // matches with the two vectors interchanged
    bool match = false;
    std::string vectors;            // "printed" or "recomputed"
};
std::vector<GramCheck> intersection_suite();
Report intersection_report();

// Determinant test for M_{b,1}^(n-4,2^2) against the minus part of M_t at degree n.
spectral::PairTest bt_pair_test(int n);

// --- dimensions ---

struct DecompositionReport {
    int n = 12;
    std::vector<std::string> rows;        // configured row labels
    std::vector<int> multiplicity;        // assembled
    std::vector<bool> split;              // self-conjugate at n: both A_n halves present
    std::vector<std::string> expected;    // printed cells ("2", "1+1", ...)
    Int total = 0, expected_total = 0;
    std::vector<std::string> mismatches;
};
DecompositionReport dimension_report(int n);
struct VReport {
    std::vector<std::pair<std::string, int>> constituents;
    Int total = 0, expected = 0;
    std::vector<std::string> mismatches;
};
VReport v_report();
Report dimension_suite();

// --- section nine ---

// Image of <p> (kind t, degree n) in S^(6,1^(n-6)) (x) A: w_n^g with <e_1>^g = <p>.
specht::SpechtVec zeta_project(const Perm& p, int n);
Report dipendenti_report();
Report udependent_suite();

// --- appendix ---

struct AppendixTerm {
    Rat coef;
    char kind = 'b';  // b, s (axes) or t (3-axes of type 3^2)
    Perm perm;
};
std::vector<AppendixTerm> appendix_terms();  // verifies the checksum
Report appendix_gram_check();

}  // namespace axc::decomp
