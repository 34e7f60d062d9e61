#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "axc/permgroup.hpp"

using namespace axc;

namespace {

Perm random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(n, img);
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("right action") {
    Perm p = Perm::parse("(1,2)", 3), q = Perm::parse("(2,3)", 3);
    // 1 -> 2 under p, then 2 -> 3 under q
    CHECK(compose(p, q).image(1) == 3);
    CHECK(compose(p, q) == Perm::parse("(1,3,2)", 3));
    CHECK(conj(p, q) == Perm::parse("(1,3)", 3));
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"(1,2)(3,4)", "(1,2,3)(4,5,6)", "(1,4,5,11,2,3,6,12)(8,10,9)", "()"}) {
        Perm p = Perm::parse(s, 12);
        CHECK(Perm::parse(p.str(), 12) == p);
    }
    CHECK(Perm::parse("()", 5).is_identity());
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(Perm::parse("(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", 12)).str() == "2^6");
    CHECK(cycle_type(Perm::parse("(1,2,3)(4,5,6)", 12)).str() == "3^2");
    CHECK(cycle_type(Perm::parse("(1,2,3,4)(5,6)", 8)) == parse_cycle_type("4.2"));
    CHECK(Perm::parse("(1,2,3,4)", 6).sign() == -1);
    CHECK(Perm::parse("(1,2,3)(4,5,6)", 6).order() == 3);
}

TEST_CASE("group laws on random permutations") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 8 + trial % 5;
        Perm a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, a.inverse()).is_identity());
        CHECK(conj(compose(a, b), c) == compose(conj(a, c), conj(b, c)));
        CHECK(conj(conj(a, b), c) == conj(a, compose(b, c)));
        CHECK(compose(a, b).sign() == a.sign() * b.sign());
        CHECK(power(a, a.order()).is_identity());
    }
}

TEST_CASE("conjugator") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Perm p = random_perm(rng, 12), g = random_perm(rng, 12);
        Perm q = conj(p, g);
        auto h = conjugator(p, q);
        REQUIRE(h);
        CHECK(conj(p, *h) == q);
        auto e = even_conjugator(p, q);
        if (e) {
            CHECK(e->sign() == 1);
            CHECK(conj(p, *e) == q);
        }
    }
    CHECK_FALSE(conjugator(Perm::parse("(1,2)", 4), Perm::parse("(1,2,3)", 4)));
}

TEST_CASE("class enumeration counts") {
    // n! / (prod of cycle lengths * automorphisms of equal cycles * (n - moved)!)
    CHECK(enumerate_cycle_type(12, parse_cycle_type("2^2")).size() == 12 * 11 * 10 * 9 / 8);
    CHECK(enumerate_cycle_type(12, parse_cycle_type("2^6")).size() == 10395u);
    CHECK(enumerate_cycle_type(12, parse_cycle_type("3")).size() == 440u);
    CHECK(enumerate_cycle_type(12, parse_cycle_type("3^2")).size() ==
          static_cast<std::size_t>(factorial(12) / (9 * 2 * factorial(6))));
}

TEST_CASE("stabilizer generators") {
    Perm s1 = Perm::parse("(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", 12);
    auto c = centralizer_gens(s1);
    CHECK(validate_centralizes(c, s1));
    CHECK(group_elements(c).size() == 46080u);  // 2^6 6!
    CHECK(group_elements(alt_presentation_centralizer_s1()).size() == 46080u);
    for (int n = 8; n <= 12; ++n) {
        auto ne = normalizer_e1_gens(n);
        CHECK(validate_normalizes(ne, Perm::parse("(1,2,3)(4,5,6)", n)));
        // |N(<e_1>)| = 2 * |C(e_1)| = 2 * 18 * (n-6)!
        CHECK(static_cast<long>(group_elements(ne).size()) == 36 * factorial(n - 6));
    }
}

TEST_CASE("transversal chain factors the group") {
    auto g = centralizer_gens(Perm::parse("(1,2)(3,4)", 8));
    auto chain = transversal_chain(g);
    std::size_t prod = 1;
    for (const auto& t : chain) prod *= t.size();
    CHECK(prod == group_elements(g).size());
}

TEST_CASE("orbit is breadth first from the seed") {
    GenSet g{"S4", 4, {Perm::parse("(1,2)", 4), Perm::parse("(1,2,3,4)", 4)}};
    auto orb = orbit(g, 1, [](int x, const Perm& h) { return h.image(x); }, [](int x) { return x; });
    CHECK(orb.front() == 1);
    CHECK(orb.size() == 4u);
}
