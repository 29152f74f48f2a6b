#include "symspec/exact.hpp"

namespace symspec {

Rational rational_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

}  // namespace symspec
