#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symspec/characters.hpp"
#include "symspec/partition.hpp"
#include "symspec/representation.hpp"

using namespace symspec;

TEST_CASE("single transposition ratio") {
    CHECK(ratio_one_transposition(Partition{2, 2}) == 0);
    CHECK(ratio_one_transposition(Partition{3, 1}) == Rational(1, 3));
    CHECK(ratio_one_transposition(Partition{6}) == 1);
    CHECK(ratio_one_transposition(Partition{1, 1, 1, 1}) == -1);
    CHECK_THROWS_AS(ratio_one_transposition(Partition{1}), std::domain_error);
}

TEST_CASE("two transposition closed form") {
    CHECK(ratio_two_transpositions(Partition{2, 2}) == 1);
    CHECK(ratio_two_transpositions(Partition{3, 1}) == Rational(-1, 3));
    CHECK(ratio_two_transpositions(Partition{4}) == 1);
    CHECK(ratio_two_transpositions(Partition{1, 1, 1, 1}) == 1);
    CHECK_THROWS_AS(ratio_two_transpositions(Partition{2, 1}), std::domain_error);
}

TEST_CASE("domino removals") {
    const auto from22 = domino_removals(Partition{2, 2});
    REQUIRE(from22.size() == 2);
    CHECK(from22[0] == std::pair<Partition, int>{Partition{1, 1}, -1});
    CHECK(from22[1] == std::pair<Partition, int>{Partition{2}, +1});
    CHECK(domino_removals(Partition{2, 1}).empty());
    const auto from31 = domino_removals(Partition{3, 1});
    REQUIRE(from31.size() == 1);
    CHECK(from31[0] == std::pair<Partition, int>{Partition{1, 1}, +1});
}

TEST_CASE("zeta chain counts") {
    CHECK(zeta(Partition{}, Partition{2, 2}) == 2);
    CHECK(zeta(Partition{}, Partition{3, 1}) == -1);
    CHECK(zeta(Partition{}, Partition{2}) == 1);
    CHECK(zeta(Partition{}, Partition{1, 1}) == -1);
    CHECK(zeta(Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(zeta(Partition{1}, Partition{2, 2, 1}) == 1);
    CHECK_THROWS_AS(zeta(Partition{1}, Partition{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(zeta(Partition{3}, Partition{2, 1, 1, 1}), std::invalid_argument);

    // signed chains agree with the layered expansion
    for (int n : {4, 6, 8}) {
        for (const Partition& p : partitions_of(n)) {
            for (int r = 1; 2 * r <= n; ++r) {
                const auto expansion = domino_expansion(p, r);
                for (const Partition& mu : partitions_of(n - 2 * r)) {
                    Integer expected(0);
                    const auto it = expansion.find(mu);
                    if (it != expansion.end()) expected = it->second;
                    bool contained = mu.rows() <= p.rows();
                    for (int i = 0; contained && i < mu.rows(); ++i)
                        contained = mu.parts()[i] <= p.parts()[i];
                    if (contained) CHECK(zeta(mu, p) == expected);
                }
            }
        }
    }
}

TEST_CASE("murnaghan-nakayama ratios") {
    CHECK(ratio_mn(Partition{2, 1}, 0) == 1);
    CHECK(ratio_mn(Partition{2, 1}, 1) == 0);
    CHECK(ratio_mn(Partition{2, 2}, 1) == 0);
    CHECK(ratio_mn(Partition{2, 2}, 2) == 1);
    CHECK(ratio_mn(Partition{3, 1}, 2) == Rational(-1, 3));
    CHECK_THROWS_AS(ratio_mn(Partition{2, 1}, 2), std::domain_error);
    CHECK_THROWS_AS(ratio_mn(Partition{2, 1}, -1), std::invalid_argument);

    for (int n = 2; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            for (int r = 0; 2 * r <= n && r <= 3; ++r) {
                CHECK(ratio_mn(p, r) == oracles::ratio_border_strip(p, r));
            }
            CHECK(ratio_mn(p, 1) == ratio_one_transposition(p));
            if (n >= 4) CHECK(ratio_mn(p, 2) == ratio_two_transpositions(p));
        }
    }
}

TEST_CASE("ratios match matrix traces") {
    for (int n = 4; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n)) {
            for (int r = 0; r <= 2; ++r) {
                std::vector<int> word;
                for (int i = 0; i < r; ++i) word.push_back(2 * i + 1);
                const double trace = trace_character(p, word);
                CHECK(std::fabs(trace - to_double(ratio_mn(p, r))) <= 1e-10);
            }
        }
    }
}

TEST_CASE("skew shapes") {
    CHECK(SkewShape({3, 2}, {1}).box_count() == 4);
    CHECK_THROWS_AS(SkewShape({2, 1}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(SkewShape({2, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SkewShape({2}, {1, 1}), std::invalid_argument);

    CHECK(skew_count(SkewShape({2, 1}, {1})) == 2);
    CHECK(skew_count(SkewShape({2, 1}, {})) == 2);
    CHECK(skew_count(SkewShape({3, 3}, {})) == 5);
    CHECK(skew_count(SkewShape({2, 2}, {1})) == 2);
    CHECK(skew_count(SkewShape({1}, {1})) == 1);

    for (const Partition& outer : partitions_of(6)) {
        for (int m = 0; m <= outer.size(); ++m) {
            for (const Partition& inner : partitions_of(m)) {
                bool contained = inner.rows() <= outer.rows();
                for (int i = 0; contained && i < inner.rows(); ++i)
                    contained = inner.parts()[i] <= outer.parts()[i];
                if (!contained) continue;
                const SkewShape s(outer.parts(), inner.parts());
                CHECK(skew_count(s) == oracles::skew_count_brute(s));
            }
        }
    }
}

TEST_CASE("limit profiles") {
    CHECK(theta_from_profiles(LimitProfile({Rational(1)}, {})) == 1);
    CHECK(theta_from_profiles(LimitProfile({}, {Rational(1)})) == -1);
    CHECK(theta_from_profiles(LimitProfile({Rational(1, 2), Rational(1, 2)}, {})) ==
          Rational(1, 2));
    CHECK(theta_from_profiles(LimitProfile({Rational(1, 2)}, {Rational(1, 2)})) == 0);
    CHECK(theta_from_profiles(LimitProfile({}, {})) == 0);
    CHECK_THROWS_AS(LimitProfile({Rational(1), Rational(1)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(LimitProfile({Rational(-1, 2)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(LimitProfile({Rational(1, 4), Rational(1, 2)}, {}), std::invalid_argument);
}

TEST_CASE("plancherel moments") {
    const PlancherelSummary two = plancherel_moments(2);
    CHECK(two.mean == 0);
    CHECK(two.variance == 1);
    const PlancherelSummary three = plancherel_moments(3);
    CHECK(three.mean == 0);
    CHECK(three.variance == Rational(1, 3));
    for (int n = 2; n <= 10; ++n) {
        const PlancherelSummary s = plancherel_moments(n);
        CHECK(s.mean == 0);
        CHECK(s.variance == make_rational(1, binomial(static_cast<long>(n), 2)));
    }
}
