#include "symspec/representation.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "symspec/errors.hpp"

namespace symspec {

DenseMatrix AdjacentGenerator::dense() const {
    const int f = dimension();
    DenseMatrix m = DenseMatrix::Zero(f, f);
    for (int t = 0; t < f; ++t) {
        m(t, t) = diag[t];
        if (partner[t] >= 0) m(t, partner[t]) = offdiag[t];
    }
    return m;
}

namespace {

AdjacentGenerator make_generator(const Partition& p,
                                 const std::vector<StandardTableau>& tableaux, int k) {
    AdjacentGenerator g;
    g.shape = p;
    g.k = k;
    const int f = static_cast<int>(tableaux.size());
    g.diag.resize(f);
    g.partner.assign(f, -1);
    g.offdiag.assign(f, 0.0);
    for (int t = 0; t < f; ++t) {
        const int d = axial_distance(tableaux[t], k);
        g.diag[t] = 1.0 / d;
        const int ad = std::abs(d);
        if (ad >= 2) {
            auto swapped = apply_adjacent(tableaux[t], k);
            g.partner[t] = tableau_index(tableaux, *swapped);
            // sqrt((d-1)(d+1))/|d| avoids cancellation in 1 - d^{-2} for large |d|.
            g.offdiag[t] =
                std::sqrt(static_cast<double>(ad - 1) * static_cast<double>(ad + 1)) / ad;
        }
    }
    return g;
}

void check_k_range(const Partition& p, int k) {
    if (p.size() < 2) throw std::out_of_range("generators need a shape with N >= 2");
    if (k < 1 || k > p.size() - 1)
        throw std::out_of_range("generator index k must be in 1..N-1");
}

}  // namespace

AdjacentGenerator generator(const Partition& p, int k, std::int64_t cap) {
    check_k_range(p, k);
    return make_generator(p, enumerate_tableaux(p, cap), k);
}

std::vector<AdjacentGenerator> build_generators(const Partition& p, std::int64_t cap) {
    if (p.size() < 2) throw std::out_of_range("generators need a shape with N >= 2");
    const auto tableaux = enumerate_tableaux(p, cap);
    std::vector<AdjacentGenerator> gens;
    gens.reserve(p.size() - 1);
    for (int k = 1; k <= p.size() - 1; ++k) gens.push_back(make_generator(p, tableaux, k));
    return gens;
}

Vector apply_generator(const AdjacentGenerator& g, const Vector& v) {
    if (v.size() != g.dimension())
        throw std::invalid_argument("vector length does not match f^lambda");
    Vector out(v.size());
    for (int t = 0; t < g.dimension(); ++t) {
        double x = g.diag[t] * v[t];
        if (g.partner[t] >= 0) x += g.offdiag[t] * v[g.partner[t]];
        out[t] = x;
    }
    return out;
}

void left_apply(const AdjacentGenerator& g, DenseMatrix& m) {
    const int f = g.dimension();
    DenseMatrix out(f, m.cols());
    for (int t = 0; t < f; ++t) {
        out.row(t) = g.diag[t] * m.row(t);
        if (g.partner[t] >= 0) out.row(t) += g.offdiag[t] * m.row(g.partner[t]);
    }
    m.swap(out);
}

void right_apply(DenseMatrix& m, const AdjacentGenerator& g) {
    const int f = g.dimension();
    DenseMatrix out(m.rows(), f);
    for (int t = 0; t < f; ++t) {
        out.col(t) = m.col(t) * g.diag[t];
        if (g.partner[t] >= 0) out.col(t) += g.offdiag[t] * m.col(g.partner[t]);
    }
    m.swap(out);
}

DenseMatrix represent_word(const Partition& p, const std::vector<int>& word,
                           std::int64_t cap) {
    const Integer dim = hook_data(p).dimension;
    if (dim > cap)
        throw DimensionCapError("f^lambda = " + dim.get_str() + " exceeds dimension cap " +
                                std::to_string(cap));
    if (word.empty())
        return DenseMatrix::Identity(static_cast<int>(dim.get_si()), static_cast<int>(dim.get_si()));
    const auto gens = build_generators(p, cap);
    for (int k : word)
        if (k < 1 || k > p.size() - 1)
            throw std::out_of_range("word index out of 1..N-1");
    DenseMatrix m = DenseMatrix::Identity(gens[0].dimension(), gens[0].dimension());
    for (int k : word) right_apply(m, gens[k - 1]);
    return m;
}

double trace_character(const Partition& p, const std::vector<int>& word, std::int64_t cap) {
    const DenseMatrix m = represent_word(p, word, cap);
    return m.trace() / m.rows();
}

double CoxeterAuditReport::max_residual() const {
    double r = involution;
    r = std::max(r, commutation);
    r = std::max(r, braid);
    r = std::max(r, symmetry);
    return std::max(r, orthogonality);
}

CoxeterAuditReport coxeter_audit(const Partition& p, std::int64_t cap) {
    const auto gens = build_generators(p, cap);
    const int f = gens.empty() ? 1 : gens[0].dimension();
    const DenseMatrix identity = DenseMatrix::Identity(f, f);

    CoxeterAuditReport rep;
    rep.shape = p;
    rep.dimension = f;

    std::vector<DenseMatrix> dense;
    dense.reserve(gens.size());
    for (const auto& g : gens) dense.push_back(g.dense());

    for (std::size_t a = 0; a < gens.size(); ++a) {
        DenseMatrix sq = dense[a];
        left_apply(gens[a], sq);
        rep.involution = std::max(rep.involution, (sq - identity).cwiseAbs().maxCoeff());
        rep.symmetry = std::max(
            rep.symmetry, (dense[a] - dense[a].transpose()).cwiseAbs().maxCoeff());
        DenseMatrix gtg = dense[a].transpose();
        right_apply(gtg, gens[a]);
        rep.orthogonality = std::max(rep.orthogonality, (gtg - identity).cwiseAbs().maxCoeff());
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 2; b < gens.size(); ++b) {
            DenseMatrix ab = dense[b];
            left_apply(gens[a], ab);
            DenseMatrix ba = dense[a];
            left_apply(gens[b], ba);
            rep.commutation = std::max(rep.commutation, (ab - ba).cwiseAbs().maxCoeff());
        }
    }
    for (std::size_t a = 0; a + 1 < gens.size(); ++a) {
        DenseMatrix aba = dense[a];
        left_apply(gens[a + 1], aba);
        left_apply(gens[a], aba);
        DenseMatrix bab = dense[a + 1];
        left_apply(gens[a], bab);
        left_apply(gens[a + 1], bab);
        rep.braid = std::max(rep.braid, (aba - bab).cwiseAbs().maxCoeff());
    }
    return rep;
}

}  // namespace symspec
