#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symspec/partition.hpp"
#include "symspec/representation.hpp"
#include "symspec/tableau.hpp"

namespace symspec {

/// One realization of the Gaussian coefficients Z_1, ..., Z_{N-1}.
struct GaussianDraw {
    int size = 0;           // number of letters N
    std::uint64_t seed = 0;
    std::vector<double> coefficients;
    double scaled_sum = 0;  // zbar = (N-1)^{-1/2} sum_k Z_k
};

/// Deterministic draw from the documented generator chain
/// (SplitMix64-seeded xoshiro256++, Marsaglia polar method).
GaussianDraw sample_coefficients(int n, std::uint64_t seed);

struct SampledMatrix {
    Partition shape;
    GaussianDraw draw;
    DenseMatrix entries;  // (N-1)^{-1/2} sum_k Z_k G_k, symmetric

    /// max(1, largest absolute entry); the unit for residual tolerances.
    double scale() const;
};

SampledMatrix assemble_matrix(const Partition& p, const GaussianDraw& draw,
                              std::int64_t dimension_cap = kDefaultDimensionCap);

/// Sparse accumulation over a prebuilt generator set, O((N-1) f^2) writes.
DenseMatrix assemble_from_generators(const std::vector<AdjacentGenerator>& generators,
                                     const GaussianDraw& draw);

/// Ascending eigenvalues of a symmetric matrix (Householder tridiagonalization
/// plus implicit-shift QL/QR). Throws EigenSolveError on non-convergence.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

/// Empirical spectral measure: mass 1/f at each eigenvalue.
struct SpectralMeasure {
    std::vector<double> eigenvalues;  // ascending
};

SpectralMeasure spectrum(const SampledMatrix& m);

/// s-th moment of the measure, (1/f) sum_i e_i^s.
double empirical_moment(const SpectralMeasure& xi, int s);

/// Fixed-width histogram with explicit underflow/overflow bins.
struct Histogram {
    double lo = -4.5;
    double hi = 4.5;
    int bins = 81;             // interior bins, half-open [edge, edge)
    std::vector<double> mass;  // size bins + 2: [underflow, interior..., overflow]

    Histogram(int bins_, double lo_, double hi_);
    Histogram() : Histogram(81, -4.5, 4.5) {}

    double bin_width() const { return (hi - lo) / bins; }
    void add(double x, double weight = 1);
    double total() const;
    void normalize();
};

struct TrialRecord {
    double scaled_sum = 0;        // zbar of the trial's draw
    std::vector<double> moments;  // m_1 .. m_smax
};

struct MomentEstimate {
    double mean = 0;
    double se = 0;  // sample standard deviation / sqrt(trials)
};

struct MonteCarloOptions {
    int bins = 81;
    double lo = -4.5;
    double hi = 4.5;
    std::int64_t dimension_cap = kDefaultDimensionCap;
    int threads = 0;  // 0 = hardware concurrency; results independent of it
};

struct MomentReport {
    Partition shape;
    int dimension = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int smax = 0;
    double theta = 0;  // thetaRatio of the shape
    std::vector<TrialRecord> per_trial;
    Histogram pooled;                        // normalized over trials * f points
    std::vector<MomentEstimate> estimates;   // index s-1 holds m_s
    std::optional<MomentEstimate> conditional;  // per-trial m_2 - m_1^2, if smax >= 2
    std::vector<double> limit_gap;           // mean of m_s - limit_moment(s, theta, zbar)
    double ks = 0;                           // pooled spectrum vs standard normal
    double max_first_moment_residual = 0;    // |m_1 - theta zbar| / scale, worst trial
    double max_trace_residual = 0;           // |sum e_i - trace| / scale, worst trial
    double max_frobenius_residual = 0;       // |sum e_i^2 - ||M||_F^2| / scale, worst trial
};

/// Runs `trials` independent draws from substreams of `seed` (trial t uses
/// trial_seed(seed, t)) and pools the spectra. Deterministic for a given
/// (shape, trials, seed, smax, histogram) regardless of thread count.
MomentReport monte_carlo(const Partition& p, int trials, std::uint64_t seed, int smax,
                         const MonteCarloOptions& options = {});

/// Kolmogorov distance between the empirical CDF of `sample` and the standard
/// normal CDF. The sample need not be sorted.
double ks_distance(std::vector<double> sample);

}  // namespace symspec
