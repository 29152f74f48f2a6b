#include "symspec/identities.hpp"

#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>

#include "symspec/characters.hpp"

namespace symspec {

StaircaseSpec::StaircaseSpec(int K_, std::vector<int> eta_) : K(K_), eta(std::move(eta_)) {
    if (K < 1) throw std::invalid_argument("StaircaseSpec: K must be positive");
    if (static_cast<int>(eta.size()) != K - 1) {
        throw std::invalid_argument("StaircaseSpec: need K-1 gap parameters");
    }
    for (int e : eta) {
        if (e < 0) throw std::invalid_argument("StaircaseSpec: gap parameters must be nonnegative");
    }
    lambda_bar.assign(K, 0);
    for (int i = K - 2; i >= 0; --i) lambda_bar[i] = lambda_bar[i + 1] + 2 * eta[i] + 1;
}

Partition StaircaseSpec::realize(long n) const {
    long total = 0;
    for (long v : lambda_bar) total += v;
    const long excess = n - total;
    if (excess < K || excess % K != 0) {
        throw std::invalid_argument("StaircaseSpec: cannot realize gaps at this size");
    }
    const long base = excess / K;
    std::vector<int> parts(K);
    for (int i = 0; i < K; ++i) parts[i] = static_cast<int>(lambda_bar[i] + base);
    return Partition(parts);
}

namespace {

void enumerate_delta(int i0, long remaining, std::vector<long>& delta, const StaircaseSpec& spec,
                     bool constrained, const std::function<void(const std::vector<long>&)>& emit) {
    const bool bounded = constrained && i0 < spec.K - 1;
    const long bound = bounded ? std::min(remaining, delta[i0 + 1] + spec.eta[i0]) : remaining;
    if (i0 == 0) {
        if (remaining <= bound) {
            delta[0] = remaining;
            emit(delta);
        }
        return;
    }
    for (long v = 0; v <= bound; ++v) {
        delta[i0] = v;
        enumerate_delta(i0 - 1, remaining - v, delta, spec, constrained, emit);
    }
}

Rational staircase_term(const std::vector<long>& lb, const std::vector<long>& delta,
                        StaircaseVariant variant) {
    const int k = static_cast<int>(lb.size());
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const long twice = lb[i] - lb[j] - i + j;
            assert(twice % 2 == 0);
            m[i][j] = inverse_factorial_or_zero(delta[j] + twice / 2);
        }
    }
    const Rational det = rational_determinant(std::move(m));
    if (det == 0) return det;
    Rational ratio(1);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const long base = lb[i] - lb[j] - i + j;
            const long shifted = base - 2 * delta[i] + 2 * delta[j];
            const Rational den = variant == StaircaseVariant::plain
                                     ? Rational(base)
                                     : Rational(factorial(base));
            ratio *= Rational(shifted) / den;
        }
    }
    return det * ratio;
}

Rational staircase_sum(const StaircaseSpec& spec, int r, StaircaseVariant variant,
                       bool constrained) {
    if (r < 0) throw std::invalid_argument("staircase_lhs: r must be nonnegative");
    Rational sum(0);
    std::vector<long> delta(spec.K, 0);
    enumerate_delta(spec.K - 1, r, delta, spec, constrained,
                    [&](const std::vector<long>& d) { sum += staircase_term(spec.lambda_bar, d, variant); });
    return Rational(factorial(r)) * sum;
}

}  // namespace

Rational staircase_lhs(const StaircaseSpec& spec, int r, StaircaseVariant variant) {
    return staircase_sum(spec, r, variant, true);
}

Rational staircase_lhs_unconstrained(const StaircaseSpec& spec, int r, StaircaseVariant variant) {
    return staircase_sum(spec, r, variant, false);
}

Rational eta_zero_lhs(int K, int r) {
    if (K < 1) throw std::invalid_argument("eta_zero_lhs: K must be positive");
    if (r < 0) throw std::invalid_argument("eta_zero_lhs: r must be nonnegative");
    Rational sum(0);
    std::vector<long> delta(K, 0);
    const std::function<void(int, long, long)> recurse = [&](int i0, long remaining, long minimum) {
        if (i0 == K - 1) {
            if (remaining < minimum) return;
            delta[i0] = remaining;
            Integer num(1);
            for (int i = 0; i < K; ++i) {
                for (int j = i + 1; j < K; ++j) {
                    const long gap = delta[j] - delta[i] + j - i;
                    num *= gap * gap;
                }
            }
            Integer den(1);
            for (int i = 0; i < K; ++i) den *= factorial(delta[i] + i);
            sum += make_rational(num, den);
            return;
        }
        for (long v = minimum; v <= remaining; ++v) {
            delta[i0] = v;
            recurse(i0 + 1, remaining - v, v);
        }
    };
    recurse(0, r, 0);
    Integer prefactor_den(1);
    for (int i = 1; i <= K; ++i) prefactor_den *= factorial(i - 1);
    return Rational(factorial(r)) * sum / Rational(prefactor_den);
}

Rational k2_series(int r) {
    if (r < 0) throw std::invalid_argument("k2_series: r must be nonnegative");
    Rational sum(0);
    for (int q = 0; 2 * q <= r; ++q) {
        const long w = r - 2 * q + 1;
        sum += make_rational(Integer(w) * w, factorial(q) * factorial(r - q + 1));
    }
    return Rational(factorial(r)) * sum;
}

StaircaseVariant resolve_staircase_variant() {
    const std::vector<StaircaseSpec> specs = {
        StaircaseSpec(2, {0}), StaircaseSpec(2, {1}),
        StaircaseSpec(3, {0, 0}), StaircaseSpec(3, {1, 0})};
    for (StaircaseVariant variant : {StaircaseVariant::plain, StaircaseVariant::factorial}) {
        bool ok = true;
        for (const StaircaseSpec& spec : specs) {
            for (int r = 0; r <= 3 && ok; ++r) {
                ok = staircase_lhs(spec, r, variant) ==
                     Rational(integer_power(static_cast<unsigned long>(spec.K), r));
            }
            if (!ok) break;
        }
        if (ok) return variant;
    }
    throw std::logic_error("neither staircase variant verifies");
}

std::vector<ProbeRow> mn_convergence_probe(const StaircaseSpec& spec, int r,
                                           const std::vector<long>& sizes) {
    if (r < 0) throw std::invalid_argument("mn_convergence_probe: r must be nonnegative");
    const Rational limit = make_rational(1, integer_power(static_cast<unsigned long>(spec.K), r));
    std::vector<ProbeRow> rows;
    rows.reserve(sizes.size());
    for (long n : sizes) {
        ProbeRow row;
        row.size = n;
        row.shape = spec.realize(n);
        row.ratio = ratio_mn(row.shape, r);
        row.deviation = row.ratio - limit;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace symspec
