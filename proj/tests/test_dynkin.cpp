#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adnil/dynkin.hpp"
#include "adnil/errors.hpp"
#include "support/brute.hpp"

using namespace adnil;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

OrbitLabel L(Kind k, int n, std::vector<int> parts, std::optional<Variant> v = std::nullopt) {
    return make_label(k, n, P(std::move(parts)), v);
}

const std::pair<Kind, int> test_ranks[] = {{Kind::A, 2}, {Kind::A, 3}, {Kind::A, 4}, {Kind::A, 5},
                                           {Kind::A, 6}, {Kind::B, 2}, {Kind::B, 3}, {Kind::C, 2},
                                           {Kind::C, 3}, {Kind::D, 4}};

}  // namespace

TEST_CASE("dynkin element examples") {
    CHECK(dynkin_element(L(Kind::A, 6, {4, 2})).h == std::vector<int>{3, 1, 1, -1, -1, -3});
    CHECK(dynkin_element(L(Kind::C, 8, {5, 5, 3, 3})).h == std::vector<int>{4, 4, 2, 2, 2, 2, 0, 0});
    CHECK(dynkin_element(L(Kind::D, 4, {4, 4}, Variant::I)).h == std::vector<int>{3, 3, 1, 1});
    const auto ii = dynkin_element(L(Kind::D, 4, {4, 4}, Variant::II));
    CHECK(ii.h == std::vector<int>{3, 3, 1, 1});
    CHECK(ii.effective() == std::vector<int>{3, 3, 1, -1});
}

TEST_CASE("dynkin element is the top half of the eigenvalue multiset") {
    for (auto [k, n] : test_ranks)
        for (const auto& l : orbit_labels(k, n)) {
            const auto h = dynkin_element(l).h;
            const auto all = brute::eigenvalues(l.partition);
            if (k == Kind::A) {
                CHECK(h == all);
            } else {
                CHECK(h == std::vector<int>(all.begin(), all.begin() + n));
                for (int x : h) CHECK(x >= 0);
            }
        }
}

TEST_CASE("weighted diagrams") {
    const auto a = RootSystem::build(Kind::A, 6);
    CHECK(weighted_diagram(a, dynkin_element(L(Kind::A, 6, {4, 2}))) == std::vector<int>{2, 0, 2, 0, 2});
    const auto c = RootSystem::build(Kind::C, 3);
    CHECK(weighted_diagram(c, dynkin_element(L(Kind::C, 3, {6}))) == std::vector<int>{2, 2, 2});
    CHECK(weighted_diagram(c, dynkin_element(L(Kind::C, 3, {1, 1, 1, 1, 1, 1}))) == std::vector<int>{0, 0, 0});
    for (auto [k, n] : test_ranks) {
        const auto rs = RootSystem::build(k, n);
        for (const auto& l : orbit_labels(k, n))
            for (int w : weighted_diagram(rs, dynkin_element(l))) CHECK((w >= 0 && w <= 2));
    }
    DynkinElement bad{Kind::A, 3, {-1, 0, 1}, std::nullopt};
    CHECK_THROWS_AS(weighted_diagram(RootSystem::build(Kind::A, 3), bad), InputError);
}

TEST_CASE("grade tables") {
    const auto c3 = RootSystem::build(Kind::C, 3);
    const auto gc = grade_table(c3, dynkin_element(L(Kind::C, 3, {4, 2})));
    CHECK(gc.dim(1) == 0);
    CHECK(gc.dim(0) == 5);
    CHECK(gc.dim(2) == 5);
    const auto d4 = RootSystem::build(Kind::D, 4);
    const auto gd = grade_table(d4, dynkin_element(L(Kind::D, 4, {4, 4}, Variant::I)));
    CHECK(gd.dim(0) == 8);
    CHECK(gd.dim(2) == 5);
    CHECK(gd.dim(1) == 0);
    for (auto [k, n] : test_ranks) {
        const auto rs = RootSystem::build(k, n);
        for (const auto& l : orbit_labels(k, n)) {
            const auto g = grade_table(rs, dynkin_element(l));
            int total = 0;
            for (auto [i, d] : g.dims) {
                total += d;
                CHECK(g.dim(-i) == d);
            }
            CHECK(total == rs.dim_g());
        }
        const auto zero = orbit_labels(k, n).back();
        CHECK(grade_table(rs, dynkin_element(zero)).dim(0) == rs.dim_g());
    }
}

TEST_CASE("graded ideals") {
    const auto c3 = RootSystem::build(Kind::C, 3);
    const auto H = dynkin_element(L(Kind::C, 3, {4, 2}));
    const auto q2 = graded_ideal(c3, H, 2);
    CHECK(q2.dim() == 8);
    CHECK_FALSE(q2.contains(c3.require_index(e_minus(3, 2, 3))));
    CHECK(graded_ideal(c3, dynkin_element(L(Kind::C, 3, {1, 1, 1, 1, 1, 1})), 1).dim() == 0);
    const auto a6 = RootSystem::build(Kind::A, 6);
    // h = (3,1,1,-1,-1,-3); pairs differing by at least 3 are (1,4),(1,5),(1,6),(2,6),(3,6).
    CHECK(graded_ideal(a6, dynkin_element(L(Kind::A, 6, {4, 2})), 3).dim() == 5);
    CHECK_THROWS_AS(graded_ideal(c3, H, 0), InputError);
    for (auto [k, n] : test_ranks) {
        const auto rs = RootSystem::build(k, n);
        for (const auto& l : orbit_labels(k, n)) {
            const auto h = dynkin_element(l);
            for (int i = 1; i <= 6; ++i) {
                const auto a = graded_ideal(rs, h, i), b = graded_ideal(rs, h, i + 1);
                CHECK(b.roots.is_subset_of(a.roots));
                CHECK(is_upward_closed(rs, a.roots));
            }
        }
    }
}

TEST_CASE("centralizer rank") {
    CHECK(centralizer_rank(L(Kind::A, 6, {4, 2})) == 1);
    CHECK(centralizer_rank(L(Kind::C, 3, {4, 2})) == 0);
    CHECK(centralizer_rank(L(Kind::D, 4, {4, 4}, Variant::I)) == 1);
    CHECK(centralizer_rank(L(Kind::C, 3, {2, 2, 1, 1})) == 2);
    CHECK(centralizer_rank(L(Kind::B, 3, {3, 1, 1, 1, 1})) == 2);
}

TEST_CASE("lower bound m") {
    CHECK(lower_bound_m(L(Kind::C, 3, {4, 2})) == 7);
    CHECK(lower_bound_m(L(Kind::D, 4, {4, 4}, Variant::I)) == 9);
    CHECK(lower_bound_m(L(Kind::D, 4, {4, 4}, Variant::II)) == 9);
    CHECK(lower_bound_m(L(Kind::B, 2, {3, 1, 1})) == 2);
    for (int n = 2; n <= 9; ++n) {
        CHECK(lower_bound_m(L(Kind::A, n, {n})) == n * (n - 1) / 2);
        CHECK(lower_bound_m(L(Kind::A, n, std::vector<int>(static_cast<std::size_t>(n), 1))) == 0);
    }
    for (Kind k : {Kind::B, Kind::C, Kind::D})
        for (int n = 3; n <= 6; ++n)
            for (const auto& l : orbit_labels(k, n)) {
                const int m = lower_bound_m(l);
                CHECK(m >= 0);
                CHECK(m <= static_cast<int>(RootSystem::build(k, n).num_positive()));
                if (l.variant == Variant::I) {
                    auto other = l;
                    other.variant = Variant::II;
                    CHECK(lower_bound_m(other) == m);
                }
            }
}
