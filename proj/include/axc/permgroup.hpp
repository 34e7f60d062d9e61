// SPDX-License-Identifier: MIT
// Permutations of {1..n}, n <= 12, acting on the right: x^(pq) = (x^p)^q.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace axc {

constexpr int kMaxDegree = 12;

class Perm {
public:
    Perm() : n_(0) { img_.fill(0); }
    explicit Perm(int n);                                // identity
    Perm(int n, const std::vector<int>& images1);        // 1-based images

    static Perm parse(const std::string& cycles, int n); // "(1,2)(3,4)", "()"
    static Perm transposition(int n, int a, int b);      // 1-based
    static Perm cycle(int n, const std::vector<int>& pts);

    int degree() const { return n_; }
    // 0-based image
    int operator[](int i) const { return img_[i]; }
    int image(int x1) const { return img_[x1 - 1] + 1; }

    bool is_identity() const;
    Perm inverse() const;
    Perm extend(int n) const;       // same permutation on a larger set
    int sign() const;               // +1 or -1
    int order() const;
    int support_max() const;        // largest moved point (1-based), 0 for identity
    std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based, min first
    std::string str() const;
    std::uint64_t key() const;      // 4 bits per point
    bool operator==(const Perm& o) const { return n_ == o.n_ && img_ == o.img_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const;

private:
    int n_;
    std::array<std::uint8_t, kMaxDegree> img_;
    friend Perm compose(const Perm&, const Perm&);
    friend Perm conj(const Perm&, const Perm&);
};

// p then q
Perm compose(const Perm& p, const Perm& q);
// x^g = g^-1 x g
Perm conj(const Perm& x, const Perm& g);
Perm power(const Perm& p, long e);

struct CycleType {
    std::vector<int> lengths;  // nontrivial lengths, descending
    bool operator==(const CycleType& o) const { return lengths == o.lengths; }
    std::string str() const;   // e.g. "2^6", "3^2", "4^2", "1"
};

CycleType cycle_type(const Perm& p);
CycleType parse_cycle_type(const std::string& s);

// g with p^g = q, cycles matched in canonical order; nullopt if types differ.
std::optional<Perm> conjugator(const Perm& p, const Perm& q);
// Some odd element of C(p), if any.
std::optional<Perm> odd_centralizing(const Perm& p);
std::optional<Perm> even_conjugator(const Perm& p, const Perm& q);

struct GenSet {
    std::string label;
    int n = 0;
    std::vector<Perm> gens;
};

GenSet centralizer_gens(const Perm& p);          // for p in the supported families
GenSet normalizer_e1_gens(int n);                // N_{S_n}(<(1,2,3)(4,5,6)>)
GenSet alt_presentation_centralizer_s1();        // second presentation for tests
bool validate_centralizes(const GenSet& g, const Perm& p);
bool validate_normalizes(const GenSet& g, const Perm& p);

std::vector<Perm> group_elements(const GenSet& g);

// Transversals T_1..T_k of a point-stabilizer chain: every element is uniquely t_k ... t_2 t_1,
// t_i in T_i, so a sum over the group factors into k short sums.
std::vector<std::vector<Perm>> transversal_chain(const GenSet& g);

// Breadth-first orbit: seed first, generators explored in index order.
template <class T, class Act, class Key>
std::vector<T> orbit(const GenSet& g, const T& seed, Act act, Key key) {
    std::vector<T> out{seed};
    std::vector<decltype(key(seed))> seen{key(seed)};
    auto known = [&](const auto& k) {
        for (const auto& s : seen) if (s == k) return true;
        return false;
    };
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& h : g.gens) {
            T y = act(out[i], h);
            auto k = key(y);
            if (!known(k)) { seen.push_back(k); out.push_back(y); }
        }
    return out;
}

// Enumerate all permutations of degree n with the given cycle type.
std::vector<Perm> enumerate_cycle_type(int n, const CycleType& ct);

}  // namespace axc
