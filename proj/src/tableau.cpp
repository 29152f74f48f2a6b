#include "symspec/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symspec/errors.hpp"

namespace symspec {

StandardTableau::StandardTableau(Partition shape, std::vector<Box> position_of, int index)
    : shape_(std::move(shape)), positions_(std::move(position_of)), index_(index) {
    if (static_cast<int>(positions_.size()) != shape_.size())
        throw std::invalid_argument("tableau entry count does not match shape size");
}

std::vector<int> StandardTableau::row_word() const {
    std::vector<std::vector<int>> grid(shape_.rows());
    for (int i = 0; i < shape_.rows(); ++i) grid[i].assign(shape_.parts()[i], 0);
    for (int m = 1; m <= size(); ++m) {
        const Box& b = positions_[m - 1];
        grid[b.row][b.col] = m;
    }
    std::vector<int> word;
    word.reserve(size());
    for (const auto& row : grid) word.insert(word.end(), row.begin(), row.end());
    return word;
}

std::string StandardTableau::render() const {
    std::vector<int> word = row_word();
    std::ostringstream os;
    std::size_t at = 0;
    for (int i = 0; i < shape_.rows(); ++i) {
        for (int j = 0; j < shape_.parts()[i]; ++j) {
            if (j) os << ' ';
            os << word[at++];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Recursive placement of N, N-1, ... into removable corners.
void fill_downward(std::vector<int>& rowlens, int entry, std::vector<Box>& positions,
                   std::vector<std::vector<Box>>& out) {
    if (entry == 0) {
        out.push_back(positions);
        return;
    }
    for (std::size_t i = 0; i < rowlens.size(); ++i) {
        if (rowlens[i] == 0) continue;
        const bool corner = (i + 1 == rowlens.size()) || (rowlens[i + 1] < rowlens[i]);
        if (!corner) continue;
        rowlens[i] -= 1;
        positions[entry - 1] = Box{static_cast<int>(i), rowlens[i]};
        fill_downward(rowlens, entry - 1, positions, out);
        rowlens[i] += 1;
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_tableaux(const Partition& p, std::int64_t cap) {
    const Integer dim = hook_data(p).dimension;
    if (dim > cap)
        throw DimensionCapError("f^lambda = " + dim.get_str() + " exceeds dimension cap " +
                                std::to_string(cap));
    const auto count = dim.get_ui();

    std::vector<int> rowlens = p.parts();
    std::vector<Box> positions(p.size());
    std::vector<std::vector<Box>> raw;
    raw.reserve(count);
    fill_downward(rowlens, p.size(), positions, raw);
    if (raw.size() != count)
        throw std::logic_error("tableau enumeration count disagrees with hook formula");

    std::vector<StandardTableau> result;
    result.reserve(raw.size());
    for (auto& pos : raw) result.emplace_back(p, std::move(pos));
    std::sort(result.begin(), result.end(),
              [](const StandardTableau& a, const StandardTableau& b) {
                  return a.row_word() < b.row_word();
              });
    for (std::size_t i = 0; i < result.size(); ++i)
        result[i].index_ = static_cast<int>(i);
    return result;
}

int tableau_index(const std::vector<StandardTableau>& enumeration, const StandardTableau& t) {
    const std::vector<int> word = t.row_word();
    auto it = std::lower_bound(enumeration.begin(), enumeration.end(), word,
                               [](const StandardTableau& a, const std::vector<int>& w) {
                                   return a.row_word() < w;
                               });
    if (it == enumeration.end() || it->row_word() != word)
        throw std::invalid_argument("tableau not found in enumeration");
    return static_cast<int>(it - enumeration.begin());
}

int axial_distance(const StandardTableau& t, int k) {
    if (k < 1 || k >= t.size())
        throw std::out_of_range("axial_distance: k must be in 1..N-1");
    return t.position_of(k + 1).content() - t.position_of(k).content();
}

std::optional<StandardTableau> apply_adjacent(const StandardTableau& t, int k) {
    const int d = axial_distance(t, k);
    if (d == 1 || d == -1) return std::nullopt;  // same row or same column
    std::vector<Box> positions;
    positions.reserve(t.size());
    for (int m = 1; m <= t.size(); ++m) positions.push_back(t.position_of(m));
    std::swap(positions[k - 1], positions[k]);
    return StandardTableau(t.shape(), std::move(positions));
}

}  // namespace symspec
