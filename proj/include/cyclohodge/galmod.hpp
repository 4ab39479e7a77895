// Galois-module linear algebra over Q for odd functions on (Z/qZ)^x:
// the matrix of group translates, its exact rank (the dimension of the
// group-algebra submodule generated by the function), the two independent
// generation criteria, the trace-compatibility relations down the
// cyclotomic tower, and the largest simple-submodule dimension.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclohodge/characters.hpp"
#include "cyclohodge/fourier.hpp"

namespace cyclohodge {

// Rows indexed by group elements s, columns by sigma; entry = h(s^{-1} sigma).
// The row for s = 1 is h itself and every row is again odd.
struct TranslateMatrix {
    std::uint64_t q;
    std::vector<std::uint64_t> units;              // row/column labels
    std::vector<std::vector<Rational>> entries;    // entries[i][j] = h(units[i]^{-1} units[j])
};

TranslateMatrix translate_matrix(const OddFunction& h);

// Exact rank over Q of translate_matrix(h), by Bareiss fraction-free
// elimination after clearing denominators. Since row(-s) = -row(s) and
// col(-sigma) = -col(sigma) for odd h, the elimination runs on the folded
// half-system matrix; the rank is unchanged.
unsigned translates_rank(const OddFunction& h);

// dim V_Q = phi(q)/2 for q > 2, and 0 for q = 2.
unsigned odd_space_dim(std::uint64_t q);

// True iff the translates of h span all of V_Q.
bool generates_V(const OddFunction& h);

struct GenerationCheck {
    bool generates;
    // Normalized coefficient <h, chi> for every odd chi, in chi order.
    std::vector<std::pair<DirichletCharacter, CycloElement>> coefficients;
};

// Second, independent criterion: h generates V_Q iff every odd-character
// coefficient is nonzero. Must agree with generates_V on every input.
GenerationCheck generation_via_characters(const OddFunction& h);

// The h functions h_j = (n-1)/2 - [na/p^j] for levels j = 1..r.
class TowerFunction {
public:
    TowerFunction(std::uint64_t n, std::uint64_t p, unsigned r);

    std::uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint64_t n() const { return n_; }
    const OddFunction& level(unsigned j) const;  // 1-based
    const std::vector<OddFunction>& levels() const { return levels_; }

private:
    std::uint64_t p_;
    unsigned r_;
    std::uint64_t n_;
    std::vector<OddFunction> levels_;
};

// h_j(a mod p^j) == sum over b in G_j of h_r(ab), exactly, for every j < r
// and every unit a mod p^r. Failures carry the witness (j, a).
IdentityReport tower_check(const TowerFunction& t);

struct TowerCenter {
    unsigned tower_dim;    // rank of the top-level function's translates
    unsigned ambient_dim;  // sum over levels of dim V_Q(p^j)
};

// Dimension of the trace-compatible tuple space down the tower; equals the
// rank at the top level once tower_check holds (which is verified first).
TowerCenter tower_center_dim(const TowerFunction& t);

// Largest Q-dimension of a simple group-module inside V_Q: the largest
// Galois orbit of odd-character values, max over odd chi of phi(order(chi)).
// Requires q > 2.
unsigned max_simple_dim(std::uint64_t q);

// Uniform odd function with integer values in [-10, 10] on a half-system of
// residues, mirrored by oddness; for property tests of the rank criteria.
OddFunction random_odd_function(std::uint64_t q, std::mt19937_64& rng);

}  // namespace cyclohodge
