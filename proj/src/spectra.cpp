#include "symspec/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "symspec/characters.hpp"
#include "symspec/errors.hpp"
#include "symspec/hermite.hpp"
#include "symspec/rng.hpp"

extern "C" void dsterf_(const int* n, double* d, double* e, int* info);

namespace symspec {

GaussianDraw sample_coefficients(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_coefficients: need at least two letters");
    GaussianDraw draw;
    draw.size = n;
    draw.seed = seed;
    draw.coefficients.resize(n - 1);
    GaussianStream stream(seed);
    double sum = 0;
    for (auto& z : draw.coefficients) {
        z = stream.next();
        sum += z;
    }
    draw.scaled_sum = sum / std::sqrt(static_cast<double>(n - 1));
    return draw;
}

double SampledMatrix::scale() const {
    return std::max(1.0, entries.cwiseAbs().maxCoeff());
}

namespace {

void assemble_into(const std::vector<AdjacentGenerator>& generators, const GaussianDraw& draw,
                   DenseMatrix& out) {
    if (generators.empty()) throw std::invalid_argument("assemble_from_generators: no generators");
    if (static_cast<int>(generators.size()) != draw.size - 1) {
        throw std::invalid_argument("assemble_from_generators: draw size mismatch");
    }
    const int f = generators.front().dimension();
    out.setZero(f, f);
    const double root = 1 / std::sqrt(static_cast<double>(draw.size - 1));
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const AdjacentGenerator& g = generators[k];
        const double z = root * draw.coefficients[k];
        for (int i = 0; i < f; ++i) {
            out(i, i) += z * g.diag[i];
            if (g.partner[i] >= 0) out(g.partner[i], i) += z * g.offdiag[i];
        }
    }
}

}  // namespace

DenseMatrix assemble_from_generators(const std::vector<AdjacentGenerator>& generators,
                                     const GaussianDraw& draw) {
    DenseMatrix m;
    assemble_into(generators, draw, m);
    return m;
}

SampledMatrix assemble_matrix(const Partition& p, const GaussianDraw& draw,
                              std::int64_t dimension_cap) {
    if (draw.size != static_cast<int>(p.size())) {
        throw std::invalid_argument("assemble_matrix: draw size does not match the shape");
    }
    SampledMatrix result;
    result.shape = p;
    result.draw = draw;
    result.entries = assemble_from_generators(build_generators(p, dimension_cap), draw);
    return result;
}

namespace {

// Householder reduction (Eigen, in place) followed by the root-free
// implicit-shift QL/QR iteration on the tridiagonal form (LAPACK dsterf).
// The workspace is reusable across solves; eigenvalues come out ascending
// in out[0..f). The lower triangle of m is destroyed.
struct SolverWorkspace {
    Vector diag, sub, hcoeffs;
};

void eigenvalues_destructive(SolverWorkspace& w, DenseMatrix& m, double* out) {
    const int f = static_cast<int>(m.rows());
    if (f == 0) return;
    if (f == 1) {
        out[0] = m(0, 0);
        return;
    }
    w.diag.resize(f);
    w.sub.resize(f - 1);
    w.hcoeffs.resize(f - 1);
    Eigen::internal::tridiagonalization_inplace(m, w.diag, w.sub, w.hcoeffs, false);
    int info = 0;
    dsterf_(&f, w.diag.data(), w.sub.data(), &info);
    if (info != 0) {
        throw EigenSolveError("tridiagonal eigenvalue iteration did not converge");
    }
    std::copy(w.diag.data(), w.diag.data() + f, out);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
    SolverWorkspace workspace;
    DenseMatrix scratch = m;
    std::vector<double> eigenvalues(static_cast<std::size_t>(m.rows()));
    eigenvalues_destructive(workspace, scratch, eigenvalues.data());
    return eigenvalues;
}

SpectralMeasure spectrum(const SampledMatrix& m) {
    return SpectralMeasure{symmetric_eigenvalues(m.entries)};
}

double empirical_moment(const SpectralMeasure& xi, int s) {
    if (s < 0) throw std::invalid_argument("empirical_moment: s must be nonnegative");
    if (xi.eigenvalues.empty()) throw std::invalid_argument("empirical_moment: empty measure");
    double sum = 0;
    for (double e : xi.eigenvalues) {
        double power = 1;
        for (int i = 0; i < s; ++i) power *= e;
        sum += power;
    }
    return sum / static_cast<double>(xi.eigenvalues.size());
}

Histogram::Histogram(int bins_, double lo_, double hi_) : lo(lo_), hi(hi_), bins(bins_) {
    if (bins_ < 1) throw std::invalid_argument("Histogram: need at least one bin");
    if (!(lo_ < hi_)) throw std::invalid_argument("Histogram: lo must be below hi");
    mass.assign(bins + 2, 0.0);
}

void Histogram::add(double x, double weight) {
    int index;
    if (x < lo) {
        index = 0;
    } else if (x >= hi) {
        index = bins + 1;
    } else {
        index = 1 + static_cast<int>((x - lo) / bin_width());
        index = std::min(index, bins);
    }
    mass[index] += weight;
}

double Histogram::total() const {
    double sum = 0;
    for (double m : mass) sum += m;
    return sum;
}

void Histogram::normalize() {
    const double sum = total();
    if (sum <= 0) throw std::logic_error("Histogram: nothing to normalize");
    for (double& m : mass) m /= sum;
}

namespace {

MomentEstimate mean_and_se(const std::vector<double>& values) {
    const std::size_t n = values.size();
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    if (n < 2) return {mean, 0};
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n))};
}

struct TrialResiduals {
    double first_moment = 0;
    double trace = 0;
    double frobenius = 0;
};

}  // namespace

MomentReport monte_carlo(const Partition& p, int trials, std::uint64_t seed, int smax,
                         const MonteCarloOptions& options) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: need at least one trial");
    if (smax < 0) throw std::invalid_argument("monte_carlo: smax must be nonnegative");
    const int n = static_cast<int>(p.size());
    if (n < 2) throw std::invalid_argument("monte_carlo: need at least two letters");

    const std::vector<AdjacentGenerator> generators = build_generators(p, options.dimension_cap);
    const int f = generators.front().dimension();
    const double theta = to_double(ratio_one_transposition(p));

    MomentReport report;
    report.shape = p;
    report.dimension = f;
    report.trials = trials;
    report.seed = seed;
    report.smax = smax;
    report.theta = theta;
    report.per_trial.resize(trials);
    report.pooled = Histogram(options.bins, options.lo, options.hi);

    std::vector<double> pooled(static_cast<std::size_t>(trials) * f);
    std::vector<TrialResiduals> residuals(trials);

    const auto run_trial = [&](int t, SolverWorkspace& workspace, DenseMatrix& scratch) {
        const GaussianDraw draw = sample_coefficients(n, trial_seed(seed, t));
        assemble_into(generators, draw, scratch);
        const double scale = std::max(1.0, scratch.cwiseAbs().maxCoeff());
        const double trace = scratch.trace();
        const double frobenius2 = scratch.squaredNorm();
        double* const eigenvalues = pooled.data() + static_cast<std::size_t>(t) * f;
        eigenvalues_destructive(workspace, scratch, eigenvalues);

        TrialRecord& record = report.per_trial[t];
        record.scaled_sum = draw.scaled_sum;
        record.moments.assign(smax, 0.0);
        double esum = 0;
        double esum2 = 0;
        for (int i = 0; i < f; ++i) {
            const double e = eigenvalues[i];
            esum += e;
            esum2 += e * e;
            double power = 1;
            for (int s = 1; s <= smax; ++s) {
                power *= e;
                record.moments[s - 1] += power;
            }
        }
        for (double& ms : record.moments) ms /= static_cast<double>(f);

        TrialResiduals& res = residuals[t];
        res.trace = std::fabs(esum - trace) / scale;
        res.frobenius = std::fabs(esum2 - frobenius2) / scale;
        res.first_moment =
            std::fabs(esum / static_cast<double>(f) - theta * draw.scaled_sum) / scale;
    };

    int threads = options.threads > 0
                      ? options.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, trials));
    if (threads == 1) {
        SolverWorkspace workspace;
        DenseMatrix scratch;
        for (int t = 0; t < trials; ++t) run_trial(t, workspace, scratch);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                SolverWorkspace workspace;
                DenseMatrix scratch;
                for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
                    run_trial(t, workspace, scratch);
                }
            });
        }
        for (auto& worker : pool) worker.join();
    }

    for (double e : pooled) report.pooled.add(e);
    report.pooled.normalize();

    std::vector<double> column(trials);
    for (int s = 1; s <= smax; ++s) {
        for (int t = 0; t < trials; ++t) column[t] = report.per_trial[t].moments[s - 1];
        report.estimates.push_back(mean_and_se(column));
    }
    if (smax >= 2) {
        for (int t = 0; t < trials; ++t) {
            const TrialRecord& record = report.per_trial[t];
            column[t] = record.moments[1] - record.moments[0] * record.moments[0];
        }
        report.conditional = mean_and_se(column);
    }
    report.limit_gap.assign(smax, 0.0);
    for (int s = 1; s <= smax; ++s) {
        double gap = 0;
        for (int t = 0; t < trials; ++t) {
            const TrialRecord& record = report.per_trial[t];
            gap += record.moments[s - 1] -
                   limit_moment(s, LimitParameters(theta, record.scaled_sum));
        }
        report.limit_gap[s - 1] = gap / static_cast<double>(trials);
    }
    for (const TrialResiduals& res : residuals) {
        report.max_first_moment_residual = std::max(report.max_first_moment_residual, res.first_moment);
        report.max_trace_residual = std::max(report.max_trace_residual, res.trace);
        report.max_frobenius_residual = std::max(report.max_frobenius_residual, res.frobenius);
    }
    report.ks = ks_distance(pooled);
    return report;
}

double ks_distance(std::vector<double> sample) {
    if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double cdf = 0.5 * std::erfc(-sample[i] / std::sqrt(2.0));
        d = std::max(d, cdf - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - cdf);
    }
    return d;
}

}  // namespace symspec
