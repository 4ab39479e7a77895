// Exact dense linear algebra: Bareiss fraction-free rank over Z and a
// rational Gaussian solver. Sizes here are desk scale (<= a few hundred).
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cyclohodge/rational.hpp"

namespace cyclohodge {

// Rank of an integer matrix by Bareiss fraction-free elimination.
// The matrix is taken by value and destroyed.
unsigned bareiss_rank(std::vector<std::vector<mpz_class>> m);

// Solves A * x = b exactly over Q (A given column-major as `columns`).
// Returns nullopt if the system is inconsistent; if the solution is not
// unique, returns one solution of the consistent system.
std::optional<std::vector<Rational>> solve_rational(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<Rational>& rhs);

}  // namespace cyclohodge
