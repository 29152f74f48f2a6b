#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspec {

// All combinatorial quantities are exact; floats appear only in spectra.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Factorial with the convention used by the skew determinant formulas:
// the factorial of a negative integer is zero, so 1/x! contributes 0.
inline Rational inverse_factorial_or_zero(long n) {
    if (n < 0) return Rational(0);
    return Rational(1) / Rational(factorial(n));
}

inline Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Integer binomial(long n, unsigned long k) { return binomial(Integer(n), k); }

inline Integer integer_power(unsigned long base, unsigned long exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

// (m-1)!! for even m >= 0, i.e. E[Z^m] for standard Gaussian Z; 0 for odd m.
inline Integer gaussian_moment_exact(long m) {
    if (m < 0) throw std::invalid_argument("negative moment order");
    if (m % 2 == 1) return Integer(0);
    Integer r(1);
    for (long j = m - 1; j >= 1; j -= 2) r *= j;
    return r;
}

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "p/q" rendering, q > 0; integers render as "p/1".
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact determinant by rational Gaussian elimination with pivoting.
Rational rational_determinant(std::vector<std::vector<Rational>> m);

}  // namespace symspec
