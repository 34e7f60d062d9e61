// SPDX-License-Identifier: MIT
// Exact rational linear algebra on top of GMP.
#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace axc {

using Rat = mpq_class;
using Int = mpz_class;

// a/b in lowest terms; the two-argument mpq_class constructor does not reduce
Rat frac(long a, long b = 1);
std::string str(const Rat& q);            // "p/q" or "p"
Rat parse_rat(const std::string& s);      // accepts "p", "p/q", "-p/q", "2^k"-free plain forms
std::string str(const std::vector<Rat>& v);  // "(a, b, ...)"

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Rat> row(std::size_t i) const;
    std::vector<Rat> col(std::size_t j) const;

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix transpose() const;
    bool operator==(const RatMatrix& o) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // M v
    std::string str() const;                                  // "[[a, b], [c, d]]"

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

Rat det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RatMatrix& m);
// basis of {x : M x = 0}
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);
// some x with M x = b, or nullopt
std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// leading principal minors
std::vector<Rat> leading_minors(const RatMatrix& m);

class SparseVec {
public:
    SparseVec() = default;
    explicit SparseVec(long dim) : dim_(dim) {}
    long dim() const { return dim_; }
    void add(long idx, const Rat& c);
    Rat get(long idx) const;
    const std::map<long, Rat>& entries() const { return e_; }
    std::size_t nnz() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }
    SparseVec& operator+=(const SparseVec& o);
    SparseVec& operator-=(const SparseVec& o);
    SparseVec operator*(const Rat& c) const;
    bool operator==(const SparseVec& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    Rat dot(const SparseVec& o) const;

private:
    long dim_ = 0;
    std::map<long, Rat> e_;
};

std::size_t rank(const std::vector<SparseVec>& vs);
// unique coefficients c with sum c_i basis_i = target, if basis independent and target in span
std::optional<std::vector<Rat>> express(const SparseVec& target, const std::vector<SparseVec>& basis);

struct LinQuadResult {
    std::vector<std::vector<Rat>> solutions;  // rational solutions
    bool irrational = false;                   // real roots exist but are irrational
    std::string error;                         // nonempty on precondition failure
    Rat discriminant;
};

// Solve A x = b (rank = cols-1) together with sum_i q_i x_i^2 = qrhs.
LinQuadResult solve_linear_quadratic(const RatMatrix& a, const std::vector<Rat>& b,
                                     const std::vector<Rat>& q, const Rat& qrhs);

// exact square root of a nonnegative rational if it is a square
std::optional<Rat> rational_sqrt(const Rat& x);

}  // namespace axc
