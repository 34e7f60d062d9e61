// SPDX-License-Identifier: MIT
// First eigenmatrices of the conjugation actions on X_b, X_s, X_t, isotypic projections in
// orbit-sum coordinates, and the invariant form restricted to stabilizer-fixed vectors.
#pragma once

#include <string>
#include <vector>

#include "axc/exactlin.hpp"
#include "axc/invsets.hpp"
#include "axc/spechtmod.hpp"

namespace axc::spectral {

using specht::Shape;

// Row (P)^lambda_j over the orbitals of the action of S_n on one class, j in ids order.
struct EigenRow {
    char kind = 's';    // b, s or t
    int n = 12;
    std::string label;  // as configured, e.g. "8,2^2" or "n-5,1^5"
    Shape lambda;
    int copy = 1;
    Int dim = 0;
    std::vector<int> ids;
    std::vector<Rat> values;
    std::string source;  // "valencies", "seed <tableau>", "configured", "mult2"

    Rat at(int id) const;
};

std::string pair_of(char kind);  // "bb", "ss", "tt"
long class_size(char kind, int n);

// Multiplicity-free rows from an invariant vector; the seed comes from configuration for kind t,
// otherwise a seeded search (auto_seed). Throws if the orbit sum vanishes or if independent seeds
// show the fixed space is not one-dimensional.
EigenRow first_eigenmatrix_row(char kind, int n, const std::string& label);

struct Mult2 {
    EigenRow row;
    std::vector<Rat> x;                    // values at the unknown orbitals
    std::vector<std::vector<Rat>> roots;   // all rational solutions of the system
    std::vector<bool> admissible;          // per root: f^lambda >= 0
    std::string note;
};
// The (n-4,2^2) row in the minus part of M_t, from orthogonality with the companion rows.
Mult2 eigenmatrix_row_mult2(int n);

// Cached dispatcher: configured diagonal rows (b, multiplicity two), the mult-2 system for t,
// invariant vectors otherwise.
const EigenRow& row(char kind, int n, const std::string& label, int copy = 1);
std::vector<std::string> constituents(char kind, int n);  // labels; for t the minus part

// Sum_j P^a_j P^b_j / k_j
Rat orthogonality(const EigenRow& a, const EigenRow& b);
Rat f_lambda(const EigenRow& r);

enum class Parity { plus, minus, neither };
std::string str(Parity p);
Parity beta_parity(const EigenRow& r);

// Vector fixed by the stabilizer of the base of `group`, in the class `cls`, given by one
// coefficient per orbit (cells of the partition group+cls).
struct OrbitSumVec {
    int n = 12;
    char group = 's';
    char cls = 's';
    std::vector<int> ids;
    std::vector<Rat> coords;

    const inv::Partition& partition() const;
    SparseVec expand() const;  // over class point indices
    Rat at(int id) const;
};

OrbitSumVec base_vector(char kind, int n);
OrbitSumVec cell_vector(int n, char group, char cls, int id);
OrbitSumVec ones_vector(int n, char group, char cls);
OrbitSumVec normalized(const OrbitSumVec& v);  // first nonzero coordinate 1

OrbitSumVec project(const OrbitSumVec& u, const EigenRow& r);

// f(x, y) through F(x,y)_ij = sum over the j-th orbit of y of gamma(z_i, w)
Rat restricted_gram(const OrbitSumVec& x, const OrbitSumVec& y);
// Same value by expanding both vectors over the classes (slow; used in tests)
Rat gram_by_expansion(const OrbitSumVec& x, const OrbitSumVec& y);

struct PairTest {
    RatMatrix gram;
    Rat det;
    bool radical = false;  // det == 0
};
PairTest pair_det_test(const OrbitSumVec& x, const OrbitSumVec& y);

// The configured orbital representatives sigma_i for kind t send <e_1> into orbital i.
inv::SelfCheck sigma_check(int n);

}  // namespace axc::spectral
