// Application layer for superelliptic Jacobians y^q = f(x), deg f = n:
// multiplicity data of the cyclotomic action on differentials, the derived
// odd functions, and the center-dimension reports the rank computations
// certify. A report whose computed dimensions disagree with the predicted
// values is not a valid state; construction throws theorem_violation with
// the full witness instead.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclohodge/fourier.hpp"

namespace cyclohodge {

// A computed quantity contradicts a predicted identity; carries the witness.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

// Multiplicities n_a = [na/q] of the eigenspace decomposition of the action
// on differentials, with d = n - 1; satisfies n_a + n_{q-a} = d on units.
struct CMTypeRecord {
    std::uint64_t q;
    std::uint64_t n;
    std::uint64_t d;  // n - 1
    std::map<std::uint64_t, std::uint64_t> n_sigma;  // unit a -> [na/q]

    // The odd function a -> d/2 - n_sigma(a); equals h_function(n, q).
    OddFunction derived_h() const;
};

CMTypeRecord cm_type(std::uint64_t n, std::uint64_t q);

struct CenterReport {
    std::uint64_t p;
    unsigned r;
    std::uint64_t n;
    bool assume_large_galois;
    std::vector<unsigned> level_dims;  // rank at level j+1, j = 0..r-1
    unsigned tower_dim;
    unsigned predicted;        // dim V_Q(p^r) = phi(p^r)/2
    unsigned ambient_dim;      // sum_j dim V_Q(p^j)
    bool exotic_gap;           // ambient_dim > tower_dim
    unsigned subvariety_bound; // 0 when (p, r) admits no bound (p = 2, r < 3)
    std::uint64_t jacobian_dim;
};

// Computes every level rank and the tower dimension, checks them against
// the predicted values (phi(p^j)/2 per level, with the q = 2 level
// contributing 0, explicitly included) and the exotic-gap characterization
// (p odd and r >= 2, or p = 2 and r >= 3). Throws theorem_violation on any
// mismatch. Requires n >= 2, p∤n, p^r > 2.
CenterReport center_report(std::uint64_t n, std::uint64_t p, unsigned r,
                           bool assume_large_galois = false);

// Dimension bound for a simple abelian subvariety: phi((p-1) p^{r-1}) for
// odd p, 2^{r-3} for p = 2 with r >= 3 (rejects p = 2, r < 3).
unsigned subvariety_bound(std::uint64_t p, unsigned r);

// True = the Jacobian of y^d = f(x) is provably not isogenous to a product
// of elliptic curves: d has a divisor q that is a prime >= 5, or 9, or 16.
bool elliptic_split_check(std::uint64_t d);

// Statement-level form of the same classifier: d >= 5 and d not in
// {6, 8, 12, 24}. Equivalent to the divisor form; tests sweep the equality.
bool elliptic_split_check_statement(std::uint64_t d);

// dim J = (n-1)(q-1)/2; integrality checked.
std::uint64_t jacobian_dim(std::uint64_t n, std::uint64_t q);

}  // namespace cyclohodge
