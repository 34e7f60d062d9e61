// SPDX-License-Identifier: MIT
#include "axc/exactlin.hpp"

#include <set>
#include <stdexcept>

namespace axc {

std::string str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat frac(long a, long b) {
    if (b == 0) throw std::invalid_argument("zero denominator");
    Rat q(a, b);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& s0) {
    std::string s;
    for (char c : s0) if (c != ' ' && c != '+') s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s0);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s0);
    q.canonicalize();
    return q;
}

std::string str(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + str(v[i]);
    return s + ")";
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    return {a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Rat> RatMatrix::col(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
    std::vector<Rat> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::string RatMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + axc::str((*this)(i, j));
        s += "]";
    }
    return s + "]";
}

Rat det(const RatMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("det of non-square matrix");
    RatMatrix m = m0;
    std::size_t n = m.rows();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rat f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(const RatMatrix& m0) {
    RatMatrix m = m0;
    return rref(m).size();
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m0) {
    RatMatrix m = m0;
    auto piv = rref(m);
    std::set<std::size_t> pset(piv.begin(), piv.end());
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (pset.count(f)) continue;
        std::vector<Rat> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("shape mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RatMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

std::vector<Rat> leading_minors(const RatMatrix& m) {
    std::vector<Rat> out;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        RatMatrix s(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s(i, j) = m(i, j);
        out.push_back(det(s));
    }
    return out;
}

void SparseVec::add(long idx, const Rat& c) {
    if (idx < 0 || idx >= dim_) throw std::out_of_range("sparse index");
    if (c == 0) return;
    auto it = e_.find(idx);
    if (it == e_.end()) {
        e_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second == 0) e_.erase(it);
}

Rat SparseVec::get(long idx) const {
    auto it = e_.find(idx);
    return it == e_.end() ? Rat(0) : it->second;
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [k, v] : o.e_) add(k, v);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [k, v] : o.e_) add(k, -v);
    return *this;
}

SparseVec SparseVec::operator*(const Rat& c) const {
    SparseVec r(dim_);
    if (c == 0) return r;
    for (const auto& [k, v] : e_) r.e_.emplace(k, v * c);
    return r;
}

Rat SparseVec::dot(const SparseVec& o) const {
    Rat s = 0;
    const auto& small = e_.size() <= o.e_.size() ? e_ : o.e_;
    const auto& big = e_.size() <= o.e_.size() ? o.e_ : e_;
    for (const auto& [k, v] : small) {
        auto it = big.find(k);
        if (it != big.end()) s += v * it->second;
    }
    return s;
}

namespace {
// Incremental echelon basis over the rationals, rows kept sparse.
struct Echelon {
    std::vector<std::map<long, Rat>> rows;  // each row: leading index has coefficient 1
    std::vector<long> leads;

    // reduce v against current rows; returns the remainder
    std::map<long, Rat> reduce(std::map<long, Rat> v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto it = v.find(leads[i]);
            if (it == v.end()) continue;
            Rat f = it->second;
            for (const auto& [k, c] : rows[i]) {
                Rat& t = v[k];
                t -= f * c;
                if (t == 0) v.erase(k);
            }
        }
        return v;
    }
    bool insert(const std::map<long, Rat>& v0) {
        auto v = reduce(v0);
        if (v.empty()) return false;
        long lead = v.begin()->first;
        Rat inv = 1 / v.begin()->second;
        for (auto& [k, c] : v) c *= inv;
        // keep rows fully reduced at their leading positions
        for (auto& r : rows) {
            auto it = r.find(lead);
            if (it == r.end()) continue;
            Rat f = it->second;
            for (const auto& [k, c] : v) {
                Rat& t = r[k];
                t -= f * c;
                if (t == 0) r.erase(k);
            }
        }
        rows.push_back(std::move(v));
        leads.push_back(lead);
        return true;
    }
};
}  // namespace

std::size_t rank(const std::vector<SparseVec>& vs) {
    Echelon e;
    for (const auto& v : vs) e.insert(v.entries());
    return e.rows.size();
}

std::optional<std::vector<Rat>> express(const SparseVec& target, const std::vector<SparseVec>& basis) {
    if (basis.empty()) {
        if (target.is_zero()) return std::vector<Rat>{};
        return std::nullopt;
    }
    // columns are basis vectors; solve restricted to the union of supports
    std::map<long, std::size_t> rowidx;
    for (const auto& b : basis)
        for (const auto& [k, v] : b.entries()) rowidx.emplace(k, 0);
    for (const auto& [k, v] : target.entries())
        if (!rowidx.count(k)) return std::nullopt;
    std::size_t r = 0;
    for (auto& [k, i] : rowidx) i = r++;
    RatMatrix a(r, basis.size());
    std::vector<Rat> b(r);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [k, v] : basis[j].entries()) a(rowidx[k], j) = v;
    for (const auto& [k, v] : target.entries()) b[rowidx[k]] = v;
    if (rank(a) != basis.size()) return std::nullopt;
    return solve(a, b);
}

std::optional<Rat> rational_sqrt(const Rat& x0) {
    Rat x = x0;
    x.canonicalize();
    if (x < 0) return std::nullopt;
    Int n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

LinQuadResult solve_linear_quadratic(const RatMatrix& a, const std::vector<Rat>& b,
                                     const std::vector<Rat>& q, const Rat& qrhs) {
    LinQuadResult res;
    std::size_t m = a.cols();
    if (q.size() != m) throw std::invalid_argument("quadratic coefficient count");
    if (rank(a) != m - 1) {
        res.error = "linear part has rank " + std::to_string(rank(a)) + ", expected " + std::to_string(m - 1);
        return res;
    }
    auto x0 = solve(a, b);
    if (!x0) {
        res.error = "linear part inconsistent";
        return res;
    }
    auto ns = nullspace(a);
    const auto& d = ns.at(0);
    // sum q_i (x0_i + t d_i)^2 = qrhs
    Rat A = 0, B = 0, C = -qrhs;
    for (std::size_t i = 0; i < m; ++i) {
        A += q[i] * d[i] * d[i];
        B += 2 * q[i] * (*x0)[i] * d[i];
        C += q[i] * (*x0)[i] * (*x0)[i];
    }
    auto point = [&](const Rat& t) {
        std::vector<Rat> x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = (*x0)[i] + t * d[i];
        return x;
    };
    if (A == 0) {
        if (B == 0) {
            res.error = "quadratic degenerates";
            return res;
        }
        res.solutions.push_back(point(-C / B));
        return res;
    }
    res.discriminant = B * B - 4 * A * C;
    if (res.discriminant < 0) return res;
    auto s = rational_sqrt(res.discriminant);
    if (!s) {
        res.irrational = true;
        return res;
    }
    Rat t1 = (-B + *s) / (2 * A), t2 = (-B - *s) / (2 * A);
    res.solutions.push_back(point(t1));
    if (t2 != t1) res.solutions.push_back(point(t2));
    return res;
}

}  // namespace axc
