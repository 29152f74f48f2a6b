#pragma once

#include <string>
#include <vector>

#include "symspec/exact.hpp"

namespace symspec {

/// Integer partition lambda = (lambda_1 >= lambda_2 >= ... >= lambda_k > 0).
/// Trailing zeros are stripped on construction; the empty partition (n = 0)
/// is valid. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }         // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }  // zero-padded view

    bool contains(int row, int col) const {  // 0-based box coordinates
        return row >= 0 && row < rows() && col >= 0 && col < parts_[row];
    }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "4,3,2,1"; empty partition renders as "-"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct HookData {
    std::vector<std::vector<int>> hooks;  // hooks[i][j] for box (i,j)
    Integer dimension;                    // f^lambda = n! / prod hooks
};

/// Content sums and the finite-n transposition character ratio.
/// theta() is only defined for n >= 2 (pairCount > 0).
class ShapeStatistics {
public:
    ShapeStatistics(Integer content_sum, Integer content_square_sum, Integer pair_count);

    const Integer& content_sum() const { return content_sum_; }
    const Integer& content_square_sum() const { return content_square_sum_; }
    const Integer& pair_count() const { return pair_count_; }
    Rational theta() const;  // content_sum / C(n,2); throws DegenerateShapeError if n < 2

private:
    Integer content_sum_;
    Integer content_square_sum_;
    Integer pair_count_;
};

Partition conjugate(const Partition& p);

HookData hook_data(const Partition& p);

/// f^lambda by the k-part determinant-style product formula; empty products
/// are 1 and k is the stored row count (no zero padding).
Integer dimension_determinant(const Partition& p);

/// Computes both the boxwise and binomial-difference forms of the content sum
/// and asserts they agree.
ShapeStatistics shape_statistics(const Partition& p);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...,
/// (1,...,1). The order is fixed; golden CLI output depends on it.
std::vector<Partition> partitions_of(int n);

/// Shared shape-spec syntax: "4,3,2,1", "stair:k" for (k,k-1,...,1),
/// "hook:N" for (N-1,1). Throws ParseError with the offending position.
Partition parse_shape_spec(const std::string& text);

}  // namespace symspec
