#pragma once

#include <map>
#include <vector>

#include "symspec/partition.hpp"

namespace symspec {

/// Skew shape alpha/beta. Zero parts are permitted in both partitions as
/// padding; inner is padded with zeros to the length of outer.
class SkewShape {
public:
    SkewShape(std::vector<int> outer, std::vector<int> inner);

    const std::vector<int>& outer() const { return outer_; }
    const std::vector<int>& inner() const { return inner_; }
    int box_count() const { return box_count_; }  // |alpha| - |beta|

private:
    std::vector<int> outer_;
    std::vector<int> inner_;
    int box_count_;
};

/// Row/column limit profile (p_i, q_j): nonnegative, weakly decreasing,
/// each summing to at most 1.
class LimitProfile {
public:
    LimitProfile(std::vector<Rational> p, std::vector<Rational> q);
    const std::vector<Rational>& p() const { return p_; }
    const std::vector<Rational>& q() const { return q_; }

private:
    std::vector<Rational> p_;
    std::vector<Rational> q_;
};

struct PlancherelSummary {
    int n = 0;
    Rational mean;
    Rational variance;
};

/// Character ratio on a single transposition: content sum over C(N,2).
/// Requires N >= 2.
Rational ratio_one_transposition(const Partition& p);

/// Closed form for the ratio on two disjoint transpositions,
/// (4(N-4)!/N!) ((sum of contents)^2 - 3 sum of squared contents + 2 C(N,2)).
/// Requires N >= 4.
Rational ratio_two_transpositions(const Partition& p);

/// Signed sum over all domino chains inner = nu_0 < nu_1 < ... < nu_m = outer
/// of the product of step signs (+1 horizontal, -1 vertical). Computed by
/// memoized recursion over single-domino removals. zeta(lambda, lambda) = 1;
/// 0 when no chain exists. Throws on parity or containment violations.
Integer zeta(const Partition& inner, const Partition& outer);

/// All single-domino removals of p with their signs.
std::vector<std::pair<Partition, int>> domino_removals(const Partition& p);

/// zeta(mu, p) for every mu reachable by removing r dominoes, as one layered
/// expansion (the (mu, nu) memo table collapsed level by level).
std::map<Partition, Integer> domino_expansion(const Partition& p, int r);

/// Character ratio on cycle type 1^{N-2r} 2^r via the domino recursion:
/// sum over mu of zeta(mu, p) f^mu / f^lambda. Requires N >= 2r.
Rational ratio_mn(const Partition& p, int r);

/// Number of standard skew tableaux of shape alpha/beta via the factorial
/// determinant, with the convention that the factorial of a negative integer
/// is zero. Exact; the determinant times r! is asserted integral.
Integer skew_count(const SkewShape& s);

/// theta = sum p_i^2 - sum q_j^2 from row/column limit profiles.
Rational theta_from_profiles(const LimitProfile& prof);

/// Exact mean and variance of the transposition character ratio under
/// Plancherel weights (f^lambda)^2 / n!. Requires 2 <= n <= cap.
PlancherelSummary plancherel_moments(int n, int cap = 20);

}  // namespace symspec
