// Test-only oracle: plain rational Gaussian elimination rank, kept
// independent of the library's Bareiss implementation (no folding, no
// integer scaling) so the two routes cross-check each other.
#pragma once

#include <cstddef>
#include <vector>

#include "cyclohodge/rational.hpp"

namespace cyclohodge::testing {

inline unsigned naive_rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    unsigned rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace cyclohodge::testing
