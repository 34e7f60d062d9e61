// SPDX-License-Identifier: MIT
// The nine dihedral Majorana algebras, built from their partial tables and checked axiom by axiom.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axc/exactlin.hpp"

namespace axc::ns {

using Vec = std::vector<Rat>;

// Eigenvalues 1, 0, 1/4, 1/32 are indexed 0..3.
extern const Rat kEigen[4];
bool fusion_allows(int a, int b, int c);  // c in a*b
int grading(int a);                        // +1 or -1

struct AxialAlgebra {
    std::string type;
    int m = 1;                        // order of the rotation on axis indices
    std::vector<std::string> labels;  // basis labels, e.g. "a0", "a-1", "u", "v", "w", "ar2", "ar3"
    std::vector<int> axes;            // axes[k] = basis index of a_{lo+k}
    int lo = 0;                       // least axis index in the Norton basis
    std::vector<std::vector<std::optional<Vec>>> prod;
    std::vector<std::vector<std::optional<Rat>>> form_tab;
    std::vector<std::string> holes;   // products or pairings left undetermined

    std::size_t dim() const { return labels.size(); }
    int axis(int i) const;            // basis index of a_i, any integer i
    int index_of(const std::string& label) const;
    Vec basis(int i) const;
    Vec mul(const Vec& x, const Vec& y) const;
    Rat form(const Vec& x, const Vec& y) const;
    RatMatrix gram() const;
    RatMatrix adjoint(int basis_index) const;  // column j = b * b_j
};

// Throws std::runtime_error on a completion contradiction.
AxialAlgebra build(const std::string& type);
const std::vector<std::string>& types();

struct AxisReport {
    std::string axis;
    int dims[4] = {0, 0, 0, 0};
    bool semisimple = false, primitive = false, fusion = false, miyamoto = false;
    int odd_sign = 0;  // action of the Miyamoto map on the odd axis, 0 if none
    std::string witness;
};

struct AxiomReport {
    std::string type;
    bool commutative = false, frobenius = false, idempotent_axes = false, unit_length = false,
         positive_definite = false, complete = false, rotation = false, norton = false;
    int rotation_order = 0;
    int norton_samples = 0;
    std::vector<AxisReport> per_axis;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

AxiomReport verify_axioms(const AxialAlgebra& alg, int norton_samples = 100);

// a_{t1} a_{t2} - (a_{t1} + a_{t2}) / 32 in the 3A algebra
Vec sigma_vector();

// a_i * a_j in the algebra of the given type as a list of (coefficient, label) pairs.
struct Term {
    Rat coef;
    std::string label;
};
std::vector<Term> expand_axis_product(const std::string& type, int i = 0, int j = 1);
std::vector<Term> terms(const AxialAlgebra& alg, const Vec& v);

}  // namespace axc::ns
