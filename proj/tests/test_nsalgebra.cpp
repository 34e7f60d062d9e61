#include <doctest.h>

#include <map>

#include "axc/invsets.hpp"
#include "axc/nsalgebra.hpp"

using namespace axc;

TEST_CASE("dimensions of the dihedral algebras") {
    const std::map<std::string, std::size_t> dims{{"1A", 1}, {"2A", 3}, {"2B", 2}, {"3A", 4}, {"3C", 3},
                                                  {"4A", 5}, {"4B", 5}, {"5A", 6}, {"6A", 8}};
    CHECK(ns::types().size() == 9u);
    for (const auto& t : ns::types()) {
        CAPTURE(t);
        CHECK(ns::build(t).dim() == dims.at(t));
    }
}

TEST_CASE("axioms hold for every type") {
    for (const auto& t : ns::types()) {
        CAPTURE(t);
        auto rep = ns::verify_axioms(ns::build(t), 100);
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.ok());
        CHECK(rep.positive_definite);
        CHECK(rep.norton_samples == 100);
    }
}

TEST_CASE("axis pairings agree with the shape table") {
    for (const auto& t : ns::types()) {
        CAPTURE(t);
        auto a = ns::build(t);
        auto a0 = a.basis(a.axis(0));
        CHECK(a.form(a0, a0) == 1);
        if (t == "1A") continue;
        CHECK(a.form(a0, a.basis(a.axis(1))) == inv::shape_gamma(t));
        CHECK(a.mul(a0, a0) == a0);
    }
}

TEST_CASE("fusion law") {
    CHECK(ns::fusion_allows(0, 0, 0));       // 1 * 1 -> 1
    CHECK(ns::fusion_allows(3, 3, 1));       // 1/32 * 1/32 -> 0
    CHECK_FALSE(ns::fusion_allows(1, 2, 1)); // 0 * 1/4 -> 1/4 only
    CHECK(ns::grading(3) == -1);
    CHECK(ns::grading(2) == 1);
}

TEST_CASE("sigma vector in 3A") {
    auto a = ns::build("3A");
    auto s = ns::sigma_vector();
    // sigma = a0 a1 - (a0 + a1)/32
    auto a0 = a.basis(a.axis(0)), a1 = a.basis(a.axis(1));
    auto p = a.mul(a0, a1);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(s[i] == p[i] - (a0[i] + a1[i]) / 32);
}
