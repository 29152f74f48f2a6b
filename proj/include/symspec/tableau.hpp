#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspec/partition.hpp"

namespace symspec {

inline constexpr std::int64_t kDefaultDimensionCap = 5000;

struct Box {
    int row = 0;  // 0-based
    int col = 0;
    int content() const { return col - row; }
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
};

/// Standard Young tableau stored entry-centric: position_of(m) is the box
/// holding m. Axial distances and adjacent swaps only need this direction;
/// the box -> entry map is derivable.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<Box> position_of, int index = -1);

    const Partition& shape() const { return shape_; }
    const Box& position_of(int entry) const { return positions_[entry - 1]; }
    int size() const { return static_cast<int>(positions_.size()); }

    /// Ordinal in the canonical enumeration of this shape; -1 when the
    /// tableau was produced outside an enumeration.
    int index() const { return index_; }

    /// Row-reading word (rows top to bottom, each left to right). The
    /// canonical basis order is lexicographic on this word.
    std::vector<int> row_word() const;

    /// Rows of entries, one row per line (CLI --verbose rendering).
    std::string render() const;

    bool operator==(const StandardTableau& o) const {
        return shape_ == o.shape_ && positions_ == o.positions_;
    }

private:
    friend std::vector<StandardTableau> enumerate_tableaux(const Partition&, std::int64_t);
    Partition shape_;
    std::vector<Box> positions_;
    int index_;
};

/// All f^lambda standard tableaux of shape p, sorted lexicographically by
/// row-reading word, each with its index set. This order defines the matrix
/// basis in the representation module and must never change.
/// Throws DimensionCapError when f^lambda exceeds cap.
std::vector<StandardTableau> enumerate_tableaux(const Partition& p,
                                                std::int64_t cap = kDefaultDimensionCap);

/// Index of t within the canonical enumeration (binary search on row word).
int tableau_index(const std::vector<StandardTableau>& enumeration, const StandardTableau& t);

/// d(T,k): content of the box holding k+1 minus content of the box holding k.
/// Never zero. Throws std::out_of_range for k outside 1..N-1.
int axial_distance(const StandardTableau& t, int k);

/// Swaps entries k and k+1; returns the swapped tableau iff it is standard,
/// which holds iff |d(T,k)| >= 2. The result carries index -1.
std::optional<StandardTableau> apply_adjacent(const StandardTableau& t, int k);

}  // namespace symspec
