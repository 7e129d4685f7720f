#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adnil/dynkin.hpp"
#include "adnil/errors.hpp"
#include "adnil/typea_formula.hpp"
#include "support/brute.hpp"

using namespace adnil;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("count_A examples") {
    CHECK(count_A(P({4, 2}), 3) == 6);
    CHECK(count_A(P({4, 2}), 0) == 3);
    for (const auto& p : all_partitions(7)) CHECK(count_A(p, p[0] - 1) == 7);
}

TEST_CASE("count_A counts Dynkin entries at or below l") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : all_partitions(n)) {
            const auto h = brute::eigenvalues(p);
            int prev = 0;
            for (int l = -n - 2; l <= n + 2; ++l) {
                int below = 0, above = 0;
                for (int x : h) (x <= l ? below : above)++;
                CHECK(count_A(p, l) == below);
                CHECK(count_A(p, l) + above == n);
                CHECK(count_A(p, l) >= prev);
                prev = count_A(p, l);
            }
        }
}

TEST_CASE("closed and linear forms") {
    CHECK(m_closed(P({4, 2})) == 11);
    CHECK(m_closed(P({2, 1, 1})) == 1);
    CHECK(m_linear(P({4, 2})) == 11);
    CHECK(m_linear(P({2, 2})) == 3);
    for (int n = 1; n <= 30; ++n) {
        CHECK(m_closed(P({n})) == n * (n - 1) / 2);
        CHECK(m_closed(P(std::vector<int>(static_cast<std::size_t>(n), 1))) == 0);
    }
    for (int n = 1; n <= 20; ++n)
        for (const auto& p : all_partitions(n)) {
            const auto r = formula_report(p);
            CHECK(r.agree);
            CHECK(r.m_via_A_counts == r.m_via_linear);
        }
}

TEST_CASE("formula equals the lower bound for every type A orbit") {
    for (int n = 2; n <= 12; ++n)
        for (const auto& p : all_partitions(n)) CHECK(m_closed(p) == lower_bound_m(make_label(Kind::A, n, p)));
}

TEST_CASE("monotonicity along covers") {
    const auto r4 = check_monotone(4);
    CHECK(r4.ok());
    CHECK(m_closed(P({4})) == 6);
    CHECK(m_closed(P({3, 1})) == 4);
    CHECK(m_closed(P({2, 2})) == 3);
    CHECK(m_closed(P({2, 1, 1})) == 1);
    CHECK(m_closed(P({1, 1, 1, 1})) == 0);
    CHECK(m_closed(P({3, 3})) == 10);
    CHECK(m_closed(P({4, 1, 1})) == 10);
    const auto r1 = check_monotone(1);
    CHECK(r1.ok());
    CHECK(r1.covers_checked == 0);
    for (int n = 1; n <= 12; ++n) {
        const auto r = check_monotone(n);
        CHECK(r.ok());
        CHECK(r.n == n);
    }
    CHECK_THROWS_AS(check_monotone(0), InputError);
}
