#include "cyclohodge/linalg.hpp"

#include <cstddef>
#include <utility>

namespace cyclohodge {

unsigned bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    mpz_class prev = 1;
    unsigned rank = 0;
    std::size_t row = 0, col = 0;
    while (row < rows && col < cols) {
        // Pivot search in the remaining submatrix, column by column.
        std::size_t pr = rows, pc = cols;
        for (std::size_t j = col; j < cols && pr == rows; ++j)
            for (std::size_t i = row; i < rows; ++i)
                if (m[i][j] != 0) { pr = i; pc = j; break; }
        if (pr == rows) break;
        std::swap(m[row], m[pr]);
        if (pc != col)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][col], m[i][pc]);

        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++rank;
        ++row;
        ++col;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve_rational(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<Rational>& rhs) {
    const std::size_t ncols = columns.size();
    const std::size_t nrows = rhs.size();
    // Augmented matrix [A | b], row-major.
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1));
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < nrows; ++i) a[i][j] = columns[j][i];
    for (std::size_t i = 0; i < nrows; ++i) a[i][ncols] = rhs[i];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pr = row;
        while (pr < nrows && a[pr][col].is_zero()) ++pr;
        if (pr == nrows) continue;
        std::swap(a[row], a[pr]);
        Rational inv = Rational(1) / a[row][col];
        for (std::size_t j = col; j <= ncols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j <= ncols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Inconsistent iff a zero row of A has a nonzero rhs.
    for (std::size_t i = row; i < nrows; ++i)
        if (!a[i][ncols].is_zero()) return std::nullopt;

    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][ncols];
    return x;
}

}  // namespace cyclohodge
