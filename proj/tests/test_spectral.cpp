#include <doctest.h>

#include "axc/data.hpp"
#include "axc/spectral.hpp"

using namespace axc;
using spectral::OrbitSumVec;

namespace {

OrbitSumVec add(OrbitSumVec a, const OrbitSumVec& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
}

OrbitSumVec zero_like(OrbitSumVec a) {
    for (auto& c : a.coords) c = 0;
    return a;
}

}  // namespace

TEST_CASE("trivial rows are the valencies") {
    for (char k : {'b', 's'}) {
        const auto& r = spectral::row(k, 12, "12");
        auto kv = inv::suborbits(12, spectral::pair_of(k)).valencies();
        for (std::size_t j = 0; j < kv.size(); ++j) CHECK(r.values[j] == Rat(kv[j]));
    }
}

TEST_CASE("projections onto all constituents sum to the identity") {
    for (char k : {'s', 'b'}) {
        CAPTURE(k);
        auto x = spectral::base_vector(k, 12);
        auto sum = zero_like(x);
        Int dims = 0;
        for (const auto& l : spectral::constituents(k, 12)) {
            int copies = k == 'b' && data::get("modules.json")["bb"]["mult2_diagonal"].contains(l) ? 2 : 1;
            for (int c = 1; c <= copies; ++c) {
                const auto& r = spectral::row(k, 12, l, c);
                sum = add(sum, spectral::project(x, r));
                dims += r.dim;
            }
        }
        CHECK(sum.coords == x.coords);
        CHECK(dims == spectral::class_size(k, 12));
    }
}

TEST_CASE("projections are idempotent and orthogonal under the form") {
    auto x = spectral::base_vector('s', 12);
    auto labels = spectral::constituents('s', 12);
    std::vector<OrbitSumVec> p;
    for (const auto& l : labels) p.push_back(spectral::project(x, spectral::row('s', 12, l)));
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(spectral::project(p[i], spectral::row('s', 12, labels[i])).coords == p[i].coords);
        for (std::size_t j = i + 1; j < p.size(); ++j) CHECK(spectral::restricted_gram(p[i], p[j]) == 0);
    }
}

TEST_CASE("restricted form equals the form on expanded vectors") {
    for (int n : {8, 9}) {
        const auto& P = inv::suborbits(n, "bb");
        for (int i : {1, 2, 5})
            for (int j : {1, 3, static_cast<int>(P.ids.size())}) {
                auto x = spectral::cell_vector(n, 'b', 'b', i), y = spectral::cell_vector(n, 'b', 'b', j);
                CHECK(spectral::restricted_gram(x, y) == spectral::gram_by_expansion(x, y));
            }
        auto bt = spectral::cell_vector(n, 'b', 't', inv::suborbits(n, "bt").ids[1]);
        CHECK(spectral::restricted_gram(spectral::base_vector('b', n), bt) ==
              spectral::gram_by_expansion(spectral::base_vector('b', n), bt));
    }
}

TEST_CASE("row orthogonality and f") {
    const auto& a = spectral::row('s', 12, "8,4");
    const auto& b = spectral::row('s', 12, "6,4,2");
    CHECK(spectral::orthogonality(a, b) == 0);
    CHECK(spectral::orthogonality(a, a) == Rat(10395) / Rat(a.dim));
    CHECK(spectral::f_lambda(b) == 0);
    CHECK(spectral::f_lambda(a) > 0);
}

TEST_CASE("t rows carry a beta parity") {
    for (int n = 8; n <= 12; ++n)
        for (const auto& l : spectral::constituents('t', n))
            CHECK(spectral::beta_parity(spectral::row('t', n, l)) == spectral::Parity::minus);
}

TEST_CASE("mult-2 system has a unique admissible root") {
    for (int n : {11, 12}) {
        auto m = spectral::eigenmatrix_row_mult2(n);
        int admissible = 0;
        for (bool a : m.admissible) admissible += a;
        CHECK(admissible == 1);
    }
}

TEST_CASE("pair determinant test") {
    auto x = spectral::base_vector('s', 12);
    auto t = spectral::pair_det_test(x, x);
    CHECK(t.det == 0);
    CHECK(t.radical);
}

TEST_CASE("sigma representatives") {
    for (int n = 8; n <= 12; ++n) CHECK(spectral::sigma_check(n).ok());
}
