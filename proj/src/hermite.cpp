#include "symspec/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace symspec {

std::vector<Rational> hermite_coefficients(int n) {
    if (n < 0) throw std::invalid_argument("hermite_coefficients: n must be nonnegative");
    std::vector<Rational> prev{Rational(1)};
    if (n == 0) return prev;
    std::vector<Rational> cur{Rational(0), Rational(1)};
    for (int m = 1; m < n; ++m) {
        // (m+1) H_{m+1} = x H_m - H_{m-1}
        std::vector<Rational> next(m + 2, Rational(0));
        for (int j = 0; j <= m; ++j) next[j + 1] = cur[j];
        for (int j = 0; j < static_cast<int>(prev.size()); ++j) next[j] -= prev[j];
        Rational scale = make_rational(1, m + 1);
        for (auto& c : next) c *= scale;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational hermite_inner_product(int m, int n) {
    const std::vector<Rational> a = hermite_coefficients(m);
    const std::vector<Rational> b = hermite_coefficients(n);
    Rational total(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            total += a[i] * b[j] * gaussian_moment_exact(static_cast<long>(i + j));
        }
    }
    return total;
}

LimitParameters::LimitParameters(double theta_, double z_) : theta(theta_), z(z_) {
    if (!(std::fabs(theta_) <= 1.0)) {
        throw std::invalid_argument("LimitParameters: |theta| must be at most 1");
    }
}

double gaussian_raw_moment(int s, double mean, double variance) {
    if (s < 0) throw std::invalid_argument("gaussian_raw_moment: s must be nonnegative");
    if (variance < 0) throw std::invalid_argument("gaussian_raw_moment: variance must be nonnegative");
    // E[(mean + Y)^s] with Y centered: sum_j C(s,j) mean^{s-j} E[Y^j].
    double total = 0;
    for (int j = 0; j <= s; j += 2) {
        double central = 1;
        for (int i = j - 1; i >= 1; i -= 2) central *= i;  // (j-1)!!
        central *= std::pow(variance, j / 2);
        const double coeff = to_double(Rational(binomial(static_cast<long>(s),
                                                         static_cast<unsigned long>(j))));
        total += coeff * std::pow(mean, s - j) * central;
    }
    return total;
}

double limit_moment(int s, const LimitParameters& lp) {
    if (s < 0) throw std::invalid_argument("limit_moment: s must be nonnegative");
    double total = 0;
    double falling = 1;  // s (s-1) ... (s-r+1), empty product for r = 0
    double theta_pow = 1;
    for (int r = 0; r <= s; ++r) {
        const long mz = s - r;
        const double zmom = to_double(Rational(gaussian_moment_exact(mz)));
        if (zmom != 0) {
            total += falling * zmom * theta_pow * hermite(r, lp.z);
        }
        falling *= static_cast<double>(s - r);
        theta_pow *= lp.theta;
    }
    return total;
}

}  // namespace symspec
