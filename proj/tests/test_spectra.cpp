#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "symspec/characters.hpp"
#include "symspec/errors.hpp"
#include "symspec/partition.hpp"
#include "symspec/rng.hpp"
#include "symspec/spectra.hpp"

using namespace symspec;

TEST_CASE("coefficient draws") {
    const GaussianDraw draw = sample_coefficients(10, 42);
    CHECK(draw.size == 10);
    CHECK(draw.coefficients.size() == 9);
    double sum = 0;
    for (double z : draw.coefficients) sum += z;
    CHECK(std::fabs(draw.scaled_sum - sum / 3.0) <= 1e-12);
    const GaussianDraw again = sample_coefficients(10, 42);
    CHECK(draw.coefficients == again.coefficients);
    CHECK_THROWS_AS(sample_coefficients(1, 42), std::invalid_argument);

    // large draw: sample mean of the variates stays near zero
    const GaussianDraw big = sample_coefficients(1000001, 7);
    double mean = 0;
    for (double z : big.coefficients) mean += z;
    mean /= static_cast<double>(big.coefficients.size());
    CHECK(std::fabs(mean) <= 4.0 / 1000.0);
}

TEST_CASE("one-dimensional shapes") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const GaussianDraw draw = sample_coefficients(4, seed);
        const SampledMatrix trivial = assemble_matrix(Partition{4}, draw);
        CHECK(trivial.entries.rows() == 1);
        CHECK(trivial.entries(0, 0) == doctest::Approx(draw.scaled_sum).epsilon(1e-14));
        const SampledMatrix sign = assemble_matrix(Partition{1, 1, 1, 1}, draw);
        CHECK(sign.entries(0, 0) == doctest::Approx(-draw.scaled_sum).epsilon(1e-14));
        const SpectralMeasure xi = spectrum(trivial);
        REQUIRE(xi.eigenvalues.size() == 1);
        CHECK(xi.eigenvalues[0] == doctest::Approx(draw.scaled_sum).epsilon(1e-14));
    }
}

TEST_CASE("assembly identities") {
    for (const Partition& p : {Partition{3, 1}, Partition{2, 2}, Partition{5, 2, 1}}) {
        const double theta = to_double(ratio_one_transposition(p));
        const double f = to_double(Rational(hook_data(p).dimension));
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const GaussianDraw draw = sample_coefficients(p.size(), trial_seed(11, seed));
            const SampledMatrix m = assemble_matrix(p, draw);
            CHECK((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(std::fabs(m.entries.trace() - f * theta * draw.scaled_sum) <=
                  1e-9 * m.scale());
        }
    }
    CHECK_THROWS_AS(assemble_matrix(Partition{3, 1}, sample_coefficients(5, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(assemble_matrix(Partition{5, 4, 3, 2, 1}, sample_coefficients(15, 1)),
                    DimensionCapError);
}

TEST_CASE("two-dimensional spectrum closed form") {
    // M = (Z_1 G_1 + Z_2 G_2)/sqrt(2) for (2,1) is traceless; eigenvalues are
    // +-sqrt(a^2 + b^2) with a = (Z_1 - Z_2/2)/sqrt(2), b = (Z_2 sqrt(3)/2)/sqrt(2)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GaussianDraw draw = sample_coefficients(3, trial_seed(99, seed));
        const SampledMatrix m = assemble_matrix(Partition{2, 1}, draw);
        const double a = (draw.coefficients[0] - draw.coefficients[1] / 2) / std::sqrt(2.0);
        const double b = draw.coefficients[1] * std::sqrt(3.0) / 2 / std::sqrt(2.0);
        const double radius = std::sqrt(a * a + b * b);
        const SpectralMeasure xi = spectrum(m);
        REQUIRE(xi.eigenvalues.size() == 2);
        CHECK(xi.eigenvalues[0] == doctest::Approx(-radius).epsilon(1e-12));
        CHECK(xi.eigenvalues[1] == doctest::Approx(radius).epsilon(1e-12));
    }
}

TEST_CASE("spectral residuals and moments") {
    const Partition p{4, 2, 1};
    const double theta = to_double(ratio_one_transposition(p));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GaussianDraw draw = sample_coefficients(p.size(), trial_seed(5, seed));
        const SampledMatrix m = assemble_matrix(p, draw);
        const SpectralMeasure xi = spectrum(m);
        const double scale = m.scale();
        CHECK(std::is_sorted(xi.eigenvalues.begin(), xi.eigenvalues.end()));
        double esum = 0, esum2 = 0;
        for (double e : xi.eigenvalues) {
            esum += e;
            esum2 += e * e;
        }
        CHECK(std::fabs(esum - m.entries.trace()) <= 1e-8 * scale);
        CHECK(std::fabs(esum2 - m.entries.squaredNorm()) <= 1e-8 * scale);
        CHECK(empirical_moment(xi, 0) == 1);
        CHECK(std::fabs(empirical_moment(xi, 1) - theta * draw.scaled_sum) <= 1e-9 * scale);
        CHECK(empirical_moment(xi, 2) >=
              empirical_moment(xi, 1) * empirical_moment(xi, 1));
    }
}

TEST_CASE("conjugation antisymmetry per draw") {
    for (const Partition& p : {Partition{3, 1}, Partition{5, 2, 1}, Partition{3, 2, 1}}) {
        const Partition q = conjugate(p);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const GaussianDraw draw = sample_coefficients(p.size(), trial_seed(17, seed));
            const SampledMatrix mp = assemble_matrix(p, draw);
            const SampledMatrix mq = assemble_matrix(q, draw);
            const SpectralMeasure xp = spectrum(mp);
            const SpectralMeasure xq = spectrum(mq);
            REQUIRE(xp.eigenvalues.size() == xq.eigenvalues.size());
            const std::size_t f = xp.eigenvalues.size();
            const double scale = std::max(mp.scale(), mq.scale());
            for (std::size_t i = 0; i < f; ++i) {
                CHECK(std::fabs(xq.eigenvalues[i] + xp.eigenvalues[f - 1 - i]) <=
                      1e-8 * scale);
            }
        }
    }
}

TEST_CASE("histogram binning") {
    Histogram h(9, -4.5, 4.5);
    CHECK(h.bin_width() == doctest::Approx(1.0));
    h.add(-5.0);       // underflow
    h.add(-4.5);       // first interior bin
    h.add(0.0);        // middle bin
    h.add(4.49);       // last interior bin
    h.add(4.5);        // overflow
    h.add(100.0);      // overflow
    CHECK(h.mass[0] == 1);
    CHECK(h.mass[1] == 1);
    CHECK(h.mass[5] == 1);
    CHECK(h.mass[9] == 1);
    CHECK(h.mass[10] == 2);
    CHECK(h.total() == 6);
    h.normalize();
    CHECK(h.total() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(Histogram(0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Histogram(5, 2, 2), std::invalid_argument);
}

TEST_CASE("monte carlo report") {
    const Partition p{3, 1};
    const double theta = to_double(ratio_one_transposition(p));
    const MomentReport report = monte_carlo(p, 400, 31337, 4);
    CHECK(report.trials == 400);
    CHECK(report.dimension == 3);
    CHECK(report.smax == 4);
    CHECK(report.per_trial.size() == 400);
    CHECK(report.estimates.size() == 4);
    CHECK(report.limit_gap.size() == 4);
    REQUIRE(report.conditional.has_value());
    CHECK(report.pooled.total() == doctest::Approx(1.0).epsilon(1e-12));

    // exact finite-size expectations: E[m_1] = 0, E[m_2] = 1
    CHECK(std::fabs(report.estimates[0].mean) <= 3 * report.estimates[0].se);
    CHECK(std::fabs(report.estimates[1].mean - 1) <= 3 * report.estimates[1].se);
    CHECK(std::fabs(report.conditional->mean - (1 - theta * theta)) <=
          3 * report.conditional->se);
    CHECK(report.max_first_moment_residual <= 1e-9);
    CHECK(report.max_trace_residual <= 1e-8);
    CHECK(report.max_frobenius_residual <= 1e-8);
    CHECK(report.ks < 0.5);

    CHECK_THROWS_AS(monte_carlo(p, 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo(p, 10, 1, -1), std::invalid_argument);
}

TEST_CASE("monte carlo is deterministic and thread independent") {
    const Partition p{2, 2};
    MonteCarloOptions serial;
    serial.threads = 1;
    MonteCarloOptions parallel;
    parallel.threads = 3;
    const MomentReport a = monte_carlo(p, 60, 7, 3, serial);
    const MomentReport b = monte_carlo(p, 60, 7, 3, serial);
    const MomentReport c = monte_carlo(p, 60, 7, 3, parallel);
    for (const MomentReport* other : {&b, &c}) {
        CHECK(a.ks == other->ks);
        for (int s = 0; s < 3; ++s) {
            CHECK(a.estimates[s].mean == other->estimates[s].mean);
            CHECK(a.estimates[s].se == other->estimates[s].se);
        }
        for (int t = 0; t < 60; ++t) {
            CHECK(a.per_trial[t].scaled_sum == other->per_trial[t].scaled_sum);
            CHECK(a.per_trial[t].moments == other->per_trial[t].moments);
        }
        CHECK(a.pooled.mass == other->pooled.mass);
    }
}

TEST_CASE("kolmogorov distance") {
    // direct standard normal sample: calibration bound
    GaussianStream g(404);
    std::vector<double> sample(100000);
    for (double& x : sample) x = g.next();
    CHECK(ks_distance(sample) <= 0.01);

    // single point mass at zero: distance is exactly 1/2
    CHECK(ks_distance({0.0}) == doctest::Approx(0.5));
    // order does not matter
    CHECK(ks_distance({1.0, -1.0, 0.0}) == ks_distance({-1.0, 0.0, 1.0}));
    CHECK_THROWS_AS(ks_distance({}), std::invalid_argument);

    // point-mass spectra: the (n) shape pools exactly the scaled sums
    const MomentReport report = monte_carlo(Partition{5}, 200, 2, 1);
    std::vector<double> sums;
    for (const TrialRecord& t : report.per_trial) sums.push_back(t.scaled_sum);
    CHECK(report.ks == doctest::Approx(ks_distance(sums)).epsilon(1e-15));
}
