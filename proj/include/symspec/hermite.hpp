#pragma once

#include <vector>

#include "symspec/exact.hpp"

namespace symspec {

/// Normalized Hermite polynomials with leading coefficient 1/n!:
/// H_0 = 1, H_1(x) = x, (n+1) H_{n+1}(x) = x H_n(x) - H_{n-1}(x).
/// With this normalization sum_n t^n H_n(x) = exp(tx - t^2/2) and
/// E[H_m(Z) H_n(Z)] = delta_{mn}/n! for standard Gaussian Z.
template <typename Scalar>
Scalar hermite(int n, const Scalar& x) {
    if (n < 0) throw std::invalid_argument("hermite: n must be nonnegative");
    if (n == 0) return Scalar(1);
    Scalar prev = Scalar(1);
    Scalar cur = x;
    for (int m = 1; m < n; ++m) {
        Scalar next = (x * cur - prev) / Scalar(m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Coefficients of H_n in the monomial basis, constant term first. Exact.
std::vector<Rational> hermite_coefficients(int n);

/// E[H_m(Z) H_n(Z)] by exact polynomial integration against Gaussian moments.
Rational hermite_inner_product(int m, int n);

struct LimitParameters {
    double theta = 0;  // |theta| <= 1
    double z = 0;      // realized value of the random mean's Gaussian
    LimitParameters(double theta_, double z_);
};

/// E[X^s] for X ~ Normal(mean, variance), via binomial expansion with
/// central moments (s-1)!! variance^{s/2}.
double gaussian_raw_moment(int s, double mean, double variance);

/// s-th limit moment of the spectral measure:
/// sum_{r=0}^s s(s-1)...(s-r+1) E[Z^{s-r}] theta^r H_r(z).
/// Equals gaussian_raw_moment(s, theta z, 1 - theta^2).
double limit_moment(int s, const LimitParameters& lp);

}  // namespace symspec
