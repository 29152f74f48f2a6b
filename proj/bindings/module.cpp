#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "symspec/characters.hpp"
#include "symspec/exact.hpp"
#include "symspec/hermite.hpp"
#include "symspec/identities.hpp"
#include "symspec/partition.hpp"
#include "symspec/representation.hpp"
#include "symspec/spectra.hpp"
#include "symspec/tableau.hpp"

namespace py = pybind11;
using namespace symspec;

namespace {

Partition to_partition(const py::object& shape) {
    if (py::isinstance<py::str>(shape)) {
        return parse_shape_spec(shape.cast<std::string>());
    }
    return Partition(shape.cast<std::vector<int>>());
}

py::object big_int(const Integer& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object fraction(const Rational& v) {
    return py::module_::import("fractions").attr("Fraction")(to_fraction_string(v));
}

py::list parts_list(const Partition& p) {
    py::list out;
    for (int v : p.parts()) out.append(v);
    return out;
}

py::dict audit_dict(const CoxeterAuditReport& audit) {
    py::dict d;
    d["shape"] = parts_list(audit.shape);
    d["dimension"] = audit.dimension;
    d["involution"] = audit.involution;
    d["commutation"] = audit.commutation;
    d["braid"] = audit.braid;
    d["symmetry"] = audit.symmetry;
    d["orthogonality"] = audit.orthogonality;
    d["max"] = audit.max_residual();
    return d;
}

py::dict report_dict(const MomentReport& report) {
    py::dict d;
    d["shape"] = parts_list(report.shape);
    d["dimension"] = report.dimension;
    d["trials"] = report.trials;
    d["seed"] = report.seed;
    d["smax"] = report.smax;
    d["theta"] = report.theta;
    py::list estimates;
    for (const MomentEstimate& e : report.estimates) {
        py::dict row;
        row["mean"] = e.mean;
        row["se"] = e.se;
        estimates.append(row);
    }
    d["estimates"] = estimates;
    if (report.conditional) {
        py::dict cond;
        cond["mean"] = report.conditional->mean;
        cond["se"] = report.conditional->se;
        d["conditional"] = cond;
    } else {
        d["conditional"] = py::none();
    }
    d["limit_gap"] = report.limit_gap;
    d["ks"] = report.ks;
    py::dict residuals;
    residuals["first_moment"] = report.max_first_moment_residual;
    residuals["trace"] = report.max_trace_residual;
    residuals["frobenius"] = report.max_frobenius_residual;
    d["residuals"] = residuals;
    py::dict hist;
    hist["lo"] = report.pooled.lo;
    hist["hi"] = report.pooled.hi;
    hist["bins"] = report.pooled.bins;
    hist["mass"] = report.pooled.mass;
    d["histogram"] = hist;
    py::list zbars;
    for (const TrialRecord& t : report.per_trial) zbars.append(t.scaled_sum);
    d["scaled_sums"] = zbars;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Adjacent-transposition representations of the symmetric group: "
        "dimensions, character ratios, and sampled spectra. Matrix bases are "
        "indexed by standard tableaux sorted by row-reading word.";

    m.def(
        "dimension",
        [](const py::object& shape) { return big_int(hook_data(to_partition(shape)).dimension); },
        py::arg("shape"), "Irreducible dimension f of a shape (exact integer).");

    m.def(
        "conjugate",
        [](const py::object& shape) { return parts_list(symspec::conjugate(to_partition(shape))); },
        py::arg("shape"), "Conjugate (transposed) shape as a list of parts.");

    m.def(
        "partitions_of",
        [](int n) {
            py::list out;
            for (const Partition& p : symspec::partitions_of(n)) out.append(parts_list(p));
            return out;
        },
        py::arg("n"), "All partitions of n in reverse lexicographic order.");

    m.def(
        "theta",
        [](const py::object& shape) {
            return fraction(ratio_one_transposition(to_partition(shape)));
        },
        py::arg("shape"),
        "Transposition character ratio (content sum over C(N,2)) as a Fraction.");

    m.def(
        "ratio_mn",
        [](const py::object& shape, int r) { return fraction(ratio_mn(to_partition(shape), r)); },
        py::arg("shape"), py::arg("r"),
        "Character ratio on r disjoint transpositions via the domino recursion.");

    m.def(
        "ratio_two",
        [](const py::object& shape) {
            return fraction(ratio_two_transpositions(to_partition(shape)));
        },
        py::arg("shape"), "Closed form for the two-transposition ratio.");

    m.def(
        "zeta",
        [](const py::object& inner, const py::object& outer) {
            return big_int(zeta(to_partition(inner), to_partition(outer)));
        },
        py::arg("inner"), py::arg("outer"), "Signed domino-chain count.");

    m.def(
        "skew_count",
        [](const std::vector<int>& outer, const std::vector<int>& inner) {
            return big_int(skew_count(SkewShape(outer, inner)));
        },
        py::arg("outer"), py::arg("inner"),
        "Number of standard fillings of the skew shape outer/inner.");

    m.def(
        "generator",
        [](const py::object& shape, int k, std::int64_t cap) {
            return symspec::generator(to_partition(shape), k, cap).dense();
        },
        py::arg("shape"), py::arg("k"), py::arg("cap") = kDefaultDimensionCap,
        "Dense orthogonal generator matrix for the adjacent transposition (k, k+1).");

    m.def(
        "trace_character",
        [](const py::object& shape, const std::vector<int>& word, std::int64_t cap) {
            return trace_character(to_partition(shape), word, cap);
        },
        py::arg("shape"), py::arg("word"), py::arg("cap") = kDefaultDimensionCap,
        "Character ratio of a word in the generators, by explicit trace.");

    m.def(
        "coxeter_audit",
        [](const py::object& shape, std::int64_t cap) {
            return audit_dict(coxeter_audit(to_partition(shape), cap));
        },
        py::arg("shape"), py::arg("cap") = kDefaultDimensionCap,
        "Residuals of the defining relations plus symmetry and orthogonality.");

    m.def(
        "assemble",
        [](const py::object& shape, std::uint64_t seed, std::int64_t cap) {
            const Partition p = to_partition(shape);
            const SampledMatrix m = assemble_matrix(p, sample_coefficients(p.size(), seed), cap);
            return py::make_tuple(m.entries, m.draw.scaled_sum);
        },
        py::arg("shape"), py::arg("seed"), py::arg("cap") = kDefaultDimensionCap,
        "Sampled matrix for one seed, with the scaled coefficient sum.");

    m.def(
        "spectrum",
        [](const py::object& shape, std::uint64_t seed, std::int64_t cap) {
            const Partition p = to_partition(shape);
            const SampledMatrix m = assemble_matrix(p, sample_coefficients(p.size(), seed), cap);
            return spectrum(m).eigenvalues;
        },
        py::arg("shape"), py::arg("seed"), py::arg("cap") = kDefaultDimensionCap,
        "Ascending eigenvalues of the sampled matrix for one seed.");

    m.def(
        "monte_carlo",
        [](const py::object& shape, int trials, std::uint64_t seed, int smax,
           std::int64_t cap, int threads) {
            MonteCarloOptions options;
            options.dimension_cap = cap;
            options.threads = threads;
            return report_dict(monte_carlo(to_partition(shape), trials, seed, smax, options));
        },
        py::arg("shape"), py::arg("trials"), py::arg("seed"), py::arg("smax") = 6,
        py::arg("cap") = kDefaultDimensionCap, py::arg("threads") = 0,
        "Pooled spectral statistics over seeded trials.");

    m.def(
        "ks_distance", [](std::vector<double> sample) { return ks_distance(std::move(sample)); },
        py::arg("sample"), "Kolmogorov distance to the standard normal.");

    m.def(
        "hermite", [](int n, double x) { return hermite(n, x); }, py::arg("n"), py::arg("x"),
        "Hermite polynomial with leading coefficient 1/n!.");

    m.def(
        "hermite_coefficients",
        [](int n) {
            py::list out;
            for (const Rational& c : hermite_coefficients(n)) out.append(fraction(c));
            return out;
        },
        py::arg("n"), "Coefficients of H_n, constant term first, as Fractions.");

    m.def(
        "limit_moment",
        [](int s, double theta, double z) { return limit_moment(s, LimitParameters{theta, z}); },
        py::arg("s"), py::arg("theta"), py::arg("z"),
        "s-th moment of the limit law N(theta z, 1 - theta^2).");

    m.def(
        "gaussian_raw_moment",
        [](int s, double mean, double variance) { return gaussian_raw_moment(s, mean, variance); },
        py::arg("s"), py::arg("mean"), py::arg("variance"),
        "Raw moment of a normal distribution.");

    m.def(
        "eta_zero", [](int K, int r) { return fraction(eta_zero_lhs(K, r)); }, py::arg("K"),
        py::arg("r"), "Zero-gap staircase sum; equals K**r.");

    m.def(
        "k2_series", [](int r) { return fraction(k2_series(r)); }, py::arg("r"),
        "Two-row binomial series; equals 2**r.");

    m.def(
        "staircase",
        [](int K, const std::vector<int>& eta, int r) {
            return fraction(staircase_lhs(StaircaseSpec(K, eta), r));
        },
        py::arg("K"), py::arg("eta"), py::arg("r"),
        "Constrained staircase determinant sum; equals K**r.");

    m.def(
        "plancherel",
        [](int n) {
            const PlancherelSummary summary = plancherel_moments(n);
            return py::make_tuple(fraction(summary.mean), fraction(summary.variance));
        },
        py::arg("n"),
        "Exact (mean, variance) of the transposition ratio under Plancherel measure.");
}
