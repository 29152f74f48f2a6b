#include "symspec/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symspec {

SkewShape::SkewShape(std::vector<int> outer, std::vector<int> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.size() > outer_.size())
        throw std::invalid_argument("inner partition has more parts than outer");
    inner_.resize(outer_.size(), 0);
    int outer_boxes = 0, inner_boxes = 0;
    for (std::size_t i = 0; i < outer_.size(); ++i) {
        if (outer_[i] < 0 || inner_[i] < 0)
            throw std::invalid_argument("skew shape parts must be nonnegative");
        if (i > 0 && (outer_[i] > outer_[i - 1] || inner_[i] > inner_[i - 1]))
            throw std::invalid_argument("skew shape parts must be weakly decreasing");
        if (inner_[i] > outer_[i])
            throw std::invalid_argument("inner partition does not fit inside outer");
        outer_boxes += outer_[i];
        inner_boxes += inner_[i];
    }
    box_count_ = outer_boxes - inner_boxes;
}

LimitProfile::LimitProfile(std::vector<Rational> p, std::vector<Rational> q)
    : p_(std::move(p)), q_(std::move(q)) {
    for (const auto* seq : {&p_, &q_}) {
        Rational total(0);
        for (std::size_t i = 0; i < seq->size(); ++i) {
            if ((*seq)[i] < 0)
                throw std::invalid_argument("profile entries must be nonnegative");
            if (i > 0 && (*seq)[i] > (*seq)[i - 1])
                throw std::invalid_argument("profile entries must be weakly decreasing");
            total += (*seq)[i];
        }
        if (total > 1) throw std::invalid_argument("profile entries must sum to at most 1");
    }
}

Rational ratio_one_transposition(const Partition& p) {
    if (p.size() < 2)
        throw std::domain_error("transposition ratio needs N >= 2");
    return shape_statistics(p).theta();
}

Rational ratio_two_transpositions(const Partition& p) {
    if (p.size() < 4)
        throw std::domain_error("two-transposition ratio needs N >= 4");
    const ShapeStatistics st = shape_statistics(p);
    const Integer bracket =
        st.content_sum() * st.content_sum() - 3 * st.content_square_sum() + 2 * st.pair_count();
    return make_rational(4 * factorial(p.size() - 4) * bracket, factorial(p.size()));
}

std::vector<std::pair<Partition, int>> domino_removals(const Partition& p) {
    std::vector<std::pair<Partition, int>> out;
    const auto& parts = p.parts();
    for (int i = 0; i < p.rows(); ++i) {
        // horizontal domino at the end of row i
        if (parts[i] >= 2) {
            const int next = (i + 1 < p.rows()) ? parts[i + 1] : 0;
            if (parts[i] - 2 >= next) {
                std::vector<int> q = parts;
                q[i] -= 2;
                out.emplace_back(Partition(std::move(q)), +1);
            }
        }
        // vertical domino at the ends of rows i, i+1
        if (i + 1 < p.rows() && parts[i] == parts[i + 1]) {
            const int next = (i + 2 < p.rows()) ? parts[i + 2] : 0;
            if (parts[i] - 1 >= next) {
                std::vector<int> q = parts;
                q[i] -= 1;
                q[i + 1] -= 1;
                out.emplace_back(Partition(std::move(q)), -1);
            }
        }
    }
    return out;
}

namespace {

bool contained_in(const Partition& inner, const Partition& outer) {
    if (inner.rows() > outer.rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.parts()[i] > outer.parts()[i]) return false;
    return true;
}

}  // namespace

Integer zeta(const Partition& inner, const Partition& outer) {
    if ((outer.size() - inner.size()) % 2 != 0)
        throw std::invalid_argument("zeta: size difference must be even");
    if (outer.size() < inner.size() || !contained_in(inner, outer))
        throw std::invalid_argument("zeta: inner must be contained in outer");

    std::map<Partition, Integer> memo;
    std::function<Integer(const Partition&)> rec = [&](const Partition& nu) -> Integer {
        if (nu.size() == inner.size()) return nu == inner ? Integer(1) : Integer(0);
        auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        Integer total(0);
        for (const auto& [smaller, sign] : domino_removals(nu))
            if (contained_in(inner, smaller)) total += sign * rec(smaller);
        memo.emplace(nu, total);
        return total;
    };
    return rec(outer);
}

std::map<Partition, Integer> domino_expansion(const Partition& p, int r) {
    if (r < 0) throw std::invalid_argument("domino_expansion: r must be nonnegative");
    std::map<Partition, Integer> layer{{p, Integer(1)}};
    for (int step = 0; step < r; ++step) {
        std::map<Partition, Integer> next;
        for (const auto& [nu, coeff] : layer)
            for (const auto& [smaller, sign] : domino_removals(nu))
                next[smaller] += coeff * sign;
        layer = std::move(next);
    }
    return layer;
}

Rational ratio_mn(const Partition& p, int r) {
    if (r < 0) throw std::invalid_argument("ratio_mn: r must be nonnegative");
    if (p.size() < 2 * r)
        throw std::domain_error("ratio_mn: cycle type needs N >= 2r");
    if (r == 0) return Rational(1);
    Integer total(0);
    for (const auto& [mu, z] : domino_expansion(p, r))
        total += z * hook_data(mu).dimension;
    return make_rational(total, hook_data(p).dimension);
}

Integer skew_count(const SkewShape& s) {
    const int k = static_cast<int>(s.outer().size());
    if (k == 0) return Integer(1);
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m[i][j] = inverse_factorial_or_zero(s.outer()[i] - s.inner()[j] - (i + 1) + (j + 1));
    Rational count = Rational(factorial(s.box_count())) * rational_determinant(std::move(m));
    if (count.get_den() != 1)
        throw std::logic_error("skew determinant gave a non-integer count");
    return count.get_num();
}

Rational theta_from_profiles(const LimitProfile& prof) {
    Rational theta(0);
    for (const auto& x : prof.p()) theta += x * x;
    for (const auto& x : prof.q()) theta -= x * x;
    return theta;
}

PlancherelSummary plancherel_moments(int n, int cap) {
    if (n < 2 || n > cap)
        throw std::invalid_argument("plancherel_moments: n must be in 2..cap");
    const Integer nfact = factorial(n);
    Rational mass(0), mean(0), second(0);
    for (const Partition& lambda : partitions_of(n)) {
        const Integer f = hook_data(lambda).dimension;
        const Rational weight = make_rational(f * f, nfact);
        const Rational ratio = ratio_one_transposition(lambda);
        mass += weight;
        mean += weight * ratio;
        second += weight * ratio * ratio;
    }
    if (mass != 1) throw std::logic_error("Plancherel weights do not sum to 1");
    PlancherelSummary out;
    out.n = n;
    out.mean = mean;
    out.variance = second - mean * mean;
    return out;
}

}  // namespace symspec
