#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symspec/characters.hpp"
#include "symspec/errors.hpp"
#include "symspec/exact.hpp"
#include "symspec/hermite.hpp"
#include "symspec/identities.hpp"
#include "symspec/partition.hpp"
#include "symspec/representation.hpp"
#include "symspec/spectra.hpp"
#include "symspec/tableau.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kDescription =
    "Operator data and spectra for adjacent-transposition representations of "
    "the symmetric group.\n"
    "Shapes: comma list \"4,3,2,1\", \"stair:k\" for (k,...,1), \"hook:N\" for "
    "(N-1,1).\n"
    "Basis convention: rows and columns are indexed by the standard tableaux "
    "of the shape,\nsorted ascending by row-reading word; index 0 fills rows "
    "with 1..N in order.";

std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    file << text;
    return 0;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

struct Options {
    std::string format = "table";
    std::int64_t cap = symspec::kDefaultDimensionCap;

    std::string shape_spec;
    int r = 1;
    std::string method = "mn";
    int trials = 1;
    std::uint64_t seed = 0;
    int smax = 6;
    int bins = 81;
    std::string out_path;
    double tolerance = 1e-12;
    int K = 1;
    std::vector<int> eta;
    int rmax = 4;
    int n = 2;

    void warn_cap() const {
        if (cap > 10000) {
            std::cerr << "warning: dimension cap " << cap
                      << " above 10000; dense eigensolves at this size are expensive\n";
        }
    }
};

int run_dim(const Options& opt) {
    const symspec::Partition p = symspec::parse_shape_spec(opt.shape_spec);
    const symspec::Integer dim = symspec::hook_data(p).dimension;
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "dim";
        j["shape"] = p.to_string();
        j["size"] = p.size();
        j["dimension"] = dim.get_str();
        return emit(dump_json(j), opt.out_path);
    }
    return emit(dim.get_str() + "\n", opt.out_path);
}

int run_charratio(const Options& opt) {
    const symspec::Partition p = symspec::parse_shape_spec(opt.shape_spec);
    bool exact = true;
    symspec::Rational ratio;
    double approx = 0;
    if (opt.method == "mn") {
        ratio = symspec::ratio_mn(p, opt.r);
    } else if (opt.method == "closed") {
        if (opt.r == 0) {
            ratio = symspec::Rational(1);
        } else if (opt.r == 1) {
            ratio = symspec::ratio_one_transposition(p);
        } else if (opt.r == 2) {
            ratio = symspec::ratio_two_transpositions(p);
        } else {
            std::cerr << "error: closed forms exist for --r 0, 1, 2 only\n";
            return 2;
        }
    } else {
        opt.warn_cap();
        std::vector<int> word;
        for (int i = 0; i < opt.r; ++i) word.push_back(2 * i + 1);
        approx = symspec::trace_character(p, word, opt.cap);
        exact = false;
    }
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "charratio";
        j["shape"] = p.to_string();
        j["size"] = p.size();
        j["r"] = opt.r;
        j["method"] = opt.method;
        if (exact) {
            j["ratio"] = symspec::to_fraction_string(ratio);
        } else {
            j["ratio"] = approx;
        }
        return emit(dump_json(j), opt.out_path);
    }
    const std::string value = exact ? symspec::to_fraction_string(ratio) : format_double(approx);
    return emit(value + "\n", opt.out_path);
}

int run_spectrum(const Options& opt) {
    const symspec::Partition p = symspec::parse_shape_spec(opt.shape_spec);
    opt.warn_cap();
    symspec::MonteCarloOptions mc;
    mc.bins = opt.bins;
    mc.dimension_cap = opt.cap;
    const symspec::MomentReport report =
        symspec::monte_carlo(p, opt.trials, opt.seed, 0, mc);
    const symspec::Histogram& h = report.pooled;
    std::ostringstream csv;
    csv << "bin_left,bin_right,mass\n";
    csv << "-inf," << format_double(h.lo) << "," << format_double(h.mass.front()) << "\n";
    for (int b = 0; b < h.bins; ++b) {
        const double left = h.lo + b * h.bin_width();
        const double right = b + 1 == h.bins ? h.hi : h.lo + (b + 1) * h.bin_width();
        csv << format_double(left) << "," << format_double(right) << ","
            << format_double(h.mass[b + 1]) << "\n";
    }
    csv << format_double(h.hi) << ",inf," << format_double(h.mass.back()) << "\n";
    return emit(csv.str(), opt.out_path);
}

int run_moments(const Options& opt) {
    const symspec::Partition p = symspec::parse_shape_spec(opt.shape_spec);
    opt.warn_cap();
    symspec::MonteCarloOptions mc;
    mc.bins = opt.bins;
    mc.dimension_cap = opt.cap;
    const symspec::MomentReport report =
        symspec::monte_carlo(p, opt.trials, opt.seed, opt.smax, mc);
    const symspec::Rational theta = symspec::ratio_one_transposition(p);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "moments";
    j["shape"] = p.to_string();
    j["size"] = p.size();
    j["dimension"] = report.dimension;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["smax"] = report.smax;
    j["thetaRatio"] = symspec::to_fraction_string(theta);
    j["theta"] = report.theta;
    ordered_json moments = ordered_json::array();
    for (int s = 1; s <= report.smax; ++s) {
        ordered_json row;
        row["s"] = s;
        row["estimate"] = report.estimates[s - 1].mean;
        row["se"] = report.estimates[s - 1].se;
        row["target"] = symspec::to_double(
            symspec::Rational(symspec::gaussian_moment_exact(s)));
        row["limitGap"] = report.limit_gap[s - 1];
        moments.push_back(row);
    }
    j["moments"] = moments;
    if (report.conditional) {
        ordered_json cond;
        cond["estimate"] = report.conditional->mean;
        cond["se"] = report.conditional->se;
        cond["target"] = 1 - report.theta * report.theta;
        j["conditionalVariance"] = cond;
    }
    ordered_json residuals;
    residuals["firstMoment"] = report.max_first_moment_residual;
    residuals["trace"] = report.max_trace_residual;
    residuals["frobenius"] = report.max_frobenius_residual;
    j["identityResiduals"] = residuals;
    j["ks"] = report.ks;
    ordered_json hist;
    hist["lo"] = report.pooled.lo;
    hist["hi"] = report.pooled.hi;
    hist["bins"] = report.pooled.bins;
    hist["underflow"] = report.pooled.mass.front();
    hist["overflow"] = report.pooled.mass.back();
    hist["mass"] = std::vector<double>(report.pooled.mass.begin() + 1,
                                       report.pooled.mass.end() - 1);
    j["histogram"] = hist;
    return emit(dump_json(j), opt.out_path);
}

int run_check_coxeter(const Options& opt) {
    const symspec::Partition p = symspec::parse_shape_spec(opt.shape_spec);
    opt.warn_cap();
    const symspec::CoxeterAuditReport audit = symspec::coxeter_audit(p, opt.cap);
    const bool pass = audit.max_residual() <= opt.tolerance;
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "check-coxeter";
        j["shape"] = p.to_string();
        j["dimension"] = audit.dimension;
        ordered_json residuals;
        residuals["involution"] = audit.involution;
        residuals["commutation"] = audit.commutation;
        residuals["braid"] = audit.braid;
        residuals["symmetry"] = audit.symmetry;
        residuals["orthogonality"] = audit.orthogonality;
        j["residuals"] = residuals;
        j["max"] = audit.max_residual();
        j["tolerance"] = opt.tolerance;
        j["pass"] = pass;
        const int rc = emit(dump_json(j), opt.out_path);
        return rc != 0 ? rc : (pass ? 0 : 1);
    }
    std::ostringstream table;
    table << "shape " << p.to_string() << "\n";
    table << "dimension " << audit.dimension << "\n";
    table << "involution " << format_double(audit.involution) << "\n";
    table << "commutation " << format_double(audit.commutation) << "\n";
    table << "braid " << format_double(audit.braid) << "\n";
    table << "symmetry " << format_double(audit.symmetry) << "\n";
    table << "orthogonality " << format_double(audit.orthogonality) << "\n";
    table << "max " << format_double(audit.max_residual()) << "\n";
    table << "tolerance " << format_double(opt.tolerance) << "\n";
    table << "status " << (pass ? "pass" : "fail") << "\n";
    const int rc = emit(table.str(), opt.out_path);
    return rc != 0 ? rc : (pass ? 0 : 1);
}

int run_check_identities(const Options& opt) {
    const symspec::StaircaseSpec spec(opt.K, opt.eta);
    const symspec::StaircaseVariant variant = symspec::resolve_staircase_variant();
    const char* variant_name =
        variant == symspec::StaircaseVariant::plain ? "plain" : "factorial";
    bool pass = true;
    struct Row {
        int r;
        std::string target, eta_zero, staircase, k2;
        bool ok;
    };
    std::vector<Row> rows;
    for (int r = 0; r <= opt.rmax; ++r) {
        const symspec::Rational target(
            symspec::integer_power(static_cast<unsigned long>(opt.K), r));
        const symspec::Rational ez = symspec::eta_zero_lhs(opt.K, r);
        const symspec::Rational sc = symspec::staircase_lhs(spec, r, variant);
        bool ok = ez == target && sc == target;
        std::string k2 = "-";
        if (opt.K == 2) {
            const symspec::Rational k2v = symspec::k2_series(r);
            ok = ok && k2v == target;
            k2 = symspec::to_fraction_string(k2v);
        }
        pass = pass && ok;
        rows.push_back({r, symspec::to_fraction_string(target),
                        symspec::to_fraction_string(ez),
                        symspec::to_fraction_string(sc), k2, ok});
    }
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "check-identities";
        j["K"] = opt.K;
        j["eta"] = opt.eta;
        j["variant"] = variant_name;
        ordered_json out_rows = ordered_json::array();
        for (const Row& row : rows) {
            ordered_json jr;
            jr["r"] = row.r;
            jr["target"] = row.target;
            jr["etaZero"] = row.eta_zero;
            jr["staircase"] = row.staircase;
            if (opt.K == 2) jr["k2"] = row.k2;
            jr["pass"] = row.ok;
            out_rows.push_back(jr);
        }
        j["rows"] = out_rows;
        j["pass"] = pass;
        const int rc = emit(dump_json(j), opt.out_path);
        return rc != 0 ? rc : (pass ? 0 : 1);
    }
    std::ostringstream table;
    table << "staircase variant " << variant_name << "\n";
    table << "r target eta_zero staircase k2 status\n";
    for (const Row& row : rows) {
        table << row.r << " " << row.target << " " << row.eta_zero << " "
              << row.staircase << " " << row.k2 << " " << (row.ok ? "pass" : "fail")
              << "\n";
    }
    table << "status " << (pass ? "pass" : "fail") << "\n";
    const int rc = emit(table.str(), opt.out_path);
    return rc != 0 ? rc : (pass ? 0 : 1);
}

int run_check_plancherel(const Options& opt) {
    const symspec::PlancherelSummary summary = symspec::plancherel_moments(opt.n);
    const symspec::Rational target =
        symspec::make_rational(1, symspec::binomial(static_cast<long>(opt.n), 2));
    const bool pass = summary.mean == 0 && summary.variance == target;
    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "check-plancherel";
        j["n"] = opt.n;
        j["mean"] = symspec::to_fraction_string(summary.mean);
        j["variance"] = symspec::to_fraction_string(summary.variance);
        j["target"] = symspec::to_fraction_string(target);
        j["pass"] = pass;
        const int rc = emit(dump_json(j), opt.out_path);
        return rc != 0 ? rc : (pass ? 0 : 1);
    }
    std::ostringstream table;
    table << "n " << opt.n << "\n";
    table << "mean " << symspec::to_fraction_string(summary.mean) << "\n";
    table << "variance " << symspec::to_fraction_string(summary.variance) << "\n";
    table << "target " << symspec::to_fraction_string(target) << "\n";
    table << "status " << (pass ? "pass" : "fail") << "\n";
    const int rc = emit(table.str(), opt.out_path);
    return rc != 0 ? rc : (pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{kDescription};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.add_option("--format", opt.format, "Output format for scalar/check commands")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--cap", opt.cap, "Dimension cap for matrix-building commands")
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "Write the artifact to this path instead of stdout");

    CLI::App* dim = app.add_subcommand("dim", "Irreducible dimension of a shape");
    dim->add_option("shape", opt.shape_spec, "Shape spec")->required();

    CLI::App* charratio =
        app.add_subcommand("charratio", "Character ratio on r disjoint transpositions");
    charratio->add_option("shape", opt.shape_spec, "Shape spec")->required();
    charratio->add_option("--r", opt.r, "Number of disjoint transpositions")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    charratio->add_option("--method", opt.method, "mn (recursion), closed, or trace")
        ->check(CLI::IsMember({"mn", "closed", "trace"}))
        ->capture_default_str();

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Pooled spectral histogram over Monte Carlo trials (CSV)");
    spectrum->add_option("shape", opt.shape_spec, "Shape spec")->required();
    spectrum->add_option("--trials", opt.trials, "Number of trials")
        ->required()
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--seed", opt.seed, "Master seed (required; no environment fallback)")
        ->required();
    spectrum->add_option("--bins", opt.bins, "Interior histogram bins over [-4.5, 4.5]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* moments =
        app.add_subcommand("moments", "Moment estimates with standard errors (JSON)");
    moments->add_option("shape", opt.shape_spec, "Shape spec")->required();
    moments->add_option("--trials", opt.trials, "Number of trials")
        ->required()
        ->check(CLI::PositiveNumber);
    moments->add_option("--seed", opt.seed, "Master seed (required; no environment fallback)")
        ->required();
    moments->add_option("--smax", opt.smax, "Highest moment order")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    moments->add_option("--bins", opt.bins, "Interior histogram bins over [-4.5, 4.5]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* check = app.add_subcommand("check", "Exact and numerical self-checks");
    check->require_subcommand(1);
    check->fallthrough(true);

    CLI::App* coxeter = check->add_subcommand("coxeter", "Generator relation audit");
    coxeter->add_option("shape", opt.shape_spec, "Shape spec")->required();
    coxeter->add_option("--tol", opt.tolerance, "Residual tolerance")->capture_default_str();

    CLI::App* identities =
        check->add_subcommand("identities", "Staircase determinant identities");
    identities->add_option("--K", opt.K, "Number of rows")
        ->required()
        ->check(CLI::PositiveNumber);
    identities->add_option("--eta", opt.eta, "K-1 gap parameters (comma separated)")
        ->delimiter(',');
    identities->add_option("--rmax", opt.rmax, "Check r = 0..rmax")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI::App* plancherel = check->add_subcommand("plancherel", "Random-shape ratio moments");
    plancherel->add_option("--n", opt.n, "Number of boxes")
        ->required()
        ->check(CLI::Range(2, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*dim) return run_dim(opt);
        if (*charratio) return run_charratio(opt);
        if (*spectrum) return run_spectrum(opt);
        if (*moments) return run_moments(opt);
        if (*coxeter) return run_check_coxeter(opt);
        if (*identities) return run_check_identities(opt);
        if (*plancherel) return run_check_plancherel(opt);
    } catch (const symspec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
