#include <doctest.h>

#include <cmath>
#include <vector>

#include "symspec/errors.hpp"
#include "symspec/partition.hpp"
#include "symspec/representation.hpp"

using namespace symspec;

namespace {

// Closed-form generator matrices for the shape (N-1, 1): basis index N - l
// hosts the tableau with l in the second row, l = 2..N.
DenseMatrix hook_generator(int n, int k) {
    const int f = n - 1;
    DenseMatrix g = DenseMatrix::Identity(f, f);
    const auto index_of = [n](int l) { return n - l; };
    if (k == 1) {
        g(index_of(2), index_of(2)) = -1;
        return g;
    }
    const double inv = 1.0 / k;
    g(index_of(k), index_of(k)) = inv;
    g(index_of(k + 1), index_of(k + 1)) = -inv;
    const double off = std::sqrt(1 - inv * inv);
    g(index_of(k), index_of(k + 1)) = off;
    g(index_of(k + 1), index_of(k)) = off;
    return g;
}

}  // namespace

TEST_CASE("two-dimensional generators of (2,1)") {
    const auto gens = build_generators(Partition{2, 1});
    REQUIRE(gens.size() == 2);
    DenseMatrix g1(2, 2), g2(2, 2);
    g1 << 1, 0, 0, -1;
    const double root3_half = std::sqrt(3.0) / 2;
    g2 << -0.5, root3_half, root3_half, 0.5;
    CHECK((gens[0].dense() - g1).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((gens[1].dense() - g2).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("hook shapes match the closed-form matrices") {
    for (int n : {3, 4, 5, 7}) {
        const auto gens = build_generators(Partition{n - 1, 1});
        REQUIRE(static_cast<int>(gens.size()) == n - 1);
        for (int k = 1; k < n; ++k) {
            CHECK((gens[k - 1].dense() - hook_generator(n, k)).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
}

TEST_CASE("eigenvalue structure of a generator") {
    // each generator is a reflection: symmetric, orthogonal, squares to I
    for (const Partition& p : {Partition{3, 1}, Partition{2, 2}, Partition{3, 2, 1}}) {
        for (const auto& g : build_generators(p)) {
            const DenseMatrix dense = g.dense();
            const int f = g.dimension();
            CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0);
            CHECK((dense * dense - DenseMatrix::Identity(f, f)).cwiseAbs().maxCoeff() <= 1e-15);
        }
    }
}

TEST_CASE("sparse application agrees with dense") {
    const Partition p{3, 2, 1};
    const auto gens = build_generators(p);
    const int f = gens.front().dimension();
    for (const auto& g : gens) {
        const DenseMatrix dense = g.dense();
        for (int j = 0; j < f; ++j) {
            const Vector column = apply_generator(g, Vector::Unit(f, j));
            CHECK((column - dense.col(j)).cwiseAbs().maxCoeff() == 0);
        }
        DenseMatrix left = DenseMatrix::Identity(f, f);
        left_apply(g, left);
        CHECK((left - dense).cwiseAbs().maxCoeff() == 0);
        DenseMatrix right = DenseMatrix::Identity(f, f);
        right_apply(right, g);
        CHECK((right - dense).cwiseAbs().maxCoeff() == 0);
    }
}

TEST_CASE("word representation") {
    const Partition p{3, 1};
    const auto gens = build_generators(p);
    const int f = gens.front().dimension();
    CHECK((represent_word(p, {}) - DenseMatrix::Identity(f, f)).cwiseAbs().maxCoeff() == 0);
    CHECK((represent_word(p, {2}) - gens[1].dense()).cwiseAbs().maxCoeff() == 0);
    const DenseMatrix product = gens[0].dense() * gens[2].dense();
    CHECK((represent_word(p, {1, 3}) - product).cwiseAbs().maxCoeff() <= 1e-15);
    const DenseMatrix braid = gens[0].dense() * gens[1].dense() * gens[0].dense();
    CHECK((represent_word(p, {1, 2, 1}) - braid).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK_THROWS_AS(represent_word(p, {4}), std::out_of_range);
}

TEST_CASE("trace route matches content statistics") {
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n)) {
            const double theta = to_double(shape_statistics(p).theta());
            for (int k = 1; k < n; ++k) {
                CHECK(trace_character(p, {k}) == doctest::Approx(theta).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("coxeter audit") {
    for (const Partition& p : {Partition{3, 1}, Partition{2, 2}, Partition{5, 2, 1}}) {
        const CoxeterAuditReport report = coxeter_audit(p);
        CHECK(report.involution <= 1e-13);
        CHECK(report.commutation <= 1e-13);
        CHECK(report.braid <= 1e-13);
        CHECK(report.symmetry == 0);
        CHECK(report.orthogonality <= 1e-13);
        CHECK(report.max_residual() <= 1e-13);
        CHECK(report.dimension == hook_data(p).dimension.get_si());
    }
}

TEST_CASE("cap propagates") {
    CHECK_THROWS_AS(build_generators(Partition{4, 3, 2, 1}, 500), DimensionCapError);
    CHECK_THROWS_AS(coxeter_audit(Partition{4, 3, 2, 1}, 500), DimensionCapError);
}
