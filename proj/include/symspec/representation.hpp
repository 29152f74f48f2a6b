#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "symspec/tableau.hpp"

namespace symspec {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Sparse symmetric orthogonal generator rho((k,k+1)) in the canonical
/// tableau basis. Row t holds d(T_t,k)^{-1} on the diagonal and, when the
/// adjacent swap of T_t is standard, sqrt(1 - d^{-2}) in column partner[t].
/// Each row has at most one off-diagonal nonzero; partner pairing is mutual
/// with equal off-diagonal value.
struct AdjacentGenerator {
    Partition shape;
    int k = 0;
    std::vector<double> diag;
    std::vector<std::int32_t> partner;  // -1 when the swap is not standard
    std::vector<double> offdiag;        // 0 where partner is -1

    int dimension() const { return static_cast<int>(diag.size()); }
    DenseMatrix dense() const;
};

/// Generator for one adjacent transposition. Requires N >= 2, 1 <= k <= N-1
/// and f^lambda <= cap.
AdjacentGenerator generator(const Partition& p, int k,
                            std::int64_t cap = kDefaultDimensionCap);

/// All N-1 generators of a shape, sharing one tableau enumeration. Immutable
/// once built; safe to share read-only across Monte Carlo workers.
std::vector<AdjacentGenerator> build_generators(const Partition& p,
                                                std::int64_t cap = kDefaultDimensionCap);

/// Matrix-free multiply G * v.
Vector apply_generator(const AdjacentGenerator& g, const Vector& v);

/// In-place M <- G * M and M <- M * G (row and column combinations; O(f^2)).
void left_apply(const AdjacentGenerator& g, DenseMatrix& m);
void right_apply(DenseMatrix& m, const AdjacentGenerator& g);

/// Product of generators in word order: word [a,b] means
/// rho((a,a+1)) * rho((b,b+1)). Empty word gives the identity.
DenseMatrix represent_word(const Partition& p, const std::vector<int>& word,
                           std::int64_t cap = kDefaultDimensionCap);

/// Character ratio of the word's permutation: trace(represent_word) / f^lambda.
double trace_character(const Partition& p, const std::vector<int>& word,
                       std::int64_t cap = kDefaultDimensionCap);

struct CoxeterAuditReport {
    Partition shape;
    std::int64_t dimension = 0;
    double involution = 0;     // max ||G_k^2 - I||
    double commutation = 0;    // max ||G_k G_l - G_l G_k||, |k-l| >= 2
    double braid = 0;          // max ||G_k G_{k+1} G_k - G_{k+1} G_k G_{k+1}||
    double symmetry = 0;       // max ||G - G^T||
    double orthogonality = 0;  // max ||G^T G - I||
    double max_residual() const;
};

/// Max-norm deviations from the Coxeter relations plus per-generator
/// symmetry and orthogonality residuals.
CoxeterAuditReport coxeter_audit(const Partition& p,
                                 std::int64_t cap = kDefaultDimensionCap);

}  // namespace symspec
