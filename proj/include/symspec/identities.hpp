#pragma once

#include <vector>

#include "symspec/exact.hpp"
#include "symspec/partition.hpp"

namespace symspec {

/// Staircase-like shape family: K rows with fixed odd gaps
/// lambda_i - lambda_{i+1} = 2 eta_i + 1, described by the reduced rows
/// lambdaBar_i = lambda_i - lambda_K (so lambdaBar_K = 0).
struct StaircaseSpec {
    int K = 1;
    std::vector<int> eta;         // K-1 nonnegative gap parameters
    std::vector<long> lambda_bar; // derived, weakly decreasing, last entry 0

    StaircaseSpec(int K_, std::vector<int> eta_);

    /// The member of the family with given total size, lambda_K derived from n.
    /// Requires n - sum(lambdaBar) positive and divisible by K.
    Partition realize(long n) const;
};

/// The determinant display carries a typographical ambiguity: the denominator
/// product reads with a factorial on each factor, while the parallel dimension
/// formula suggests none. Both readings are implemented; resolve_staircase_variant
/// reports which one actually verifies.
enum class StaircaseVariant { plain, factorial };

/// r! sum_delta det(1/(delta_j + (lambdaBar_i - lambdaBar_j - i + j)/2)!)
///   * prod_{i<j}(lambdaBar_i - lambdaBar_j - 2 delta_i + 2 delta_j - i + j)
///   / prod_{i<j}(lambdaBar_i - lambdaBar_j - i + j)       [plain]
/// with the sum over nonnegative delta, sum = r, delta_i <= delta_{i+1} + eta_i.
/// The factorial variant applies a factorial to each denominator factor.
/// Expected value K^r.
Rational staircase_lhs(const StaircaseSpec& spec, int r,
                       StaircaseVariant variant = StaircaseVariant::plain);

/// Same sum with the delta constraint dropped; exists so tests can show the
/// constraint is load-bearing.
Rational staircase_lhs_unconstrained(const StaircaseSpec& spec, int r,
                                     StaircaseVariant variant = StaircaseVariant::plain);

/// eta = 0 specialization:
/// (r!/prod_i (i-1)!) sum prod_{i<j}(delta_j - delta_i + j - i)^2 / prod_i (delta_i + i - 1)!
/// over 0 <= delta_1 <= ... <= delta_K with sum = r. Expected value K^r.
Rational eta_zero_lhs(int K, int r);

/// K = 2 binomial check: r! sum_{q=0}^{floor(r/2)} (r - 2q + 1)^2 / (q! (r - q + 1)!).
/// Expected value 2^r.
Rational k2_series(int r);

/// Evaluates both staircase variants against K^r and the eta = 0 specialization
/// over a small grid and returns the variant that verifies.
StaircaseVariant resolve_staircase_variant();

struct ProbeRow {
    long size = 0;       // n = |lambda_n|
    Partition shape;
    Rational ratio;      // ratio_mn(lambda_n, r)
    Rational deviation;  // ratio - K^{-r}
};

/// Exact finite-n character ratios along the family, with deviations from the
/// limit value K^{-r}; deviations should shrink along increasing sizes.
std::vector<ProbeRow> mn_convergence_probe(const StaircaseSpec& spec, int r,
                                           const std::vector<long>& sizes);

}  // namespace symspec
