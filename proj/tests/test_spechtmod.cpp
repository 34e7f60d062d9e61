#include <doctest.h>

#include <functional>
#include <map>

#include "axc/spechtmod.hpp"

using namespace axc;
using specht::Shape;

namespace {

// standard Young tableaux by removing the largest entry from a corner
long syt(Shape s) {
    static std::map<Shape, long> memo;
    while (!s.empty() && s.back() == 0) s.pop_back();
    if (s.empty()) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    long total = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i + 1 == s.size() || s[i] > s[i + 1]) {
            Shape t = s;
            --t[i];
            total += syt(t);
        }
    return memo[s] = total;
}

void partitions(int n, int max, Shape& cur, std::vector<Shape>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("hook lengths agree with tableau counts") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Shape> all;
        Shape cur;
        partitions(n, n, cur, all);
        for (const auto& l : all) CHECK(specht::dim_specht(l) == syt(l));
    }
    CHECK(specht::dim_specht({4, 4, 4}) == 462);
    CHECK(specht::dim_specht({10, 2}) == 54);
}

TEST_CASE("polytabloids span a space of dimension dim S^lambda") {
    for (const Shape& l : {Shape{3, 2}, Shape{2, 2, 1}, Shape{3, 1, 1}, Shape{4, 2}, Shape{3, 3}, Shape{2, 2, 2}})
        CHECK(Int(static_cast<unsigned long>(specht::polytabloid_span_rank(l))) == specht::dim_specht(l));
}

TEST_CASE("polytabloid action") {
    specht::Tableau t{{{1, 2, 3}, {4, 5}}};
    auto e = specht::polytabloid(t, false);
    CHECK(e.terms.size() == 4u);  // column group of order 4
    Perm g = Perm::parse("(1,4)", 5);
    // a column transposition acts by -1
    CHECK(e.act(g) == e.scaled(-1));
    auto tw = specht::polytabloid(t, true);
    Perm h = Perm::parse("(1,2)", 5);
    // twisted: sign of the permutation times the plain action
    CHECK(tw.act(h).kappa(tw.act(h)) == tw.kappa(tw));
}

TEST_CASE("invariant vectors are fixed by the group") {
    specht::Tableau t{{{1, 2, 3, 4}, {5, 6}, {7, 8}}};
    GenSet g = centralizer_gens(Perm::parse("(1,2)(3,4)", 8));
    auto v = specht::invariant_vector(t, false, g);
    for (const auto& h : g.gens) CHECK(v.act(h) == v);
}

TEST_CASE("bar notation round trip") {
    specht::Tableau t{{{1, 2, 3, 4, 5, 6}, {7, 8}}};
    auto k = specht::tabloid_key(t);
    auto s = specht::bar(k, 8, 2);
    CHECK(specht::parse_bar(s, {6, 2}) == k);
}
