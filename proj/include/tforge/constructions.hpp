#ifndef TFORGE_CONSTRUCTIONS_HPP
#define TFORGE_CONSTRUCTIONS_HPP

// Named triangles and sequences with exact values: the classic generated
// triangles (Pascal, Motzkin, Catalan, ...), the weighted tangent-number
// and factorial triangles, the Entringer family, and the Bernoulli /
// tangent / zeta-coefficient cross-computations.

#include "tforge/numerics.hpp"
#include "tforge/triangle_engine.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tforge {

// Default bound on generated triangle rows (CLI --cap overrides it).
inline constexpr int kDefaultTriangleRowCap = 64;

enum class TriangleId {
    Pascal,        // pascal
    MotzkinEx4,    // motzkin-ex4
    CatalanEx5,    // catalan-ex5
    Powers2Ex2,    // powers2-ex2
    FlatEx1,       // flat-ex1
    Thm1_1,        // thm-1-1: tangent numbers in the first column
    Cor2_4,        // cor-2-4: Motzkin suffix-class counts
    Thm3_2Poly,    // thm-3-2: flat-count polynomials in the first column
    Cor4_6,        // cor-4-6: factorials in the first column
    Thm5_3Poly,    // thm-5-3: tangent polynomials in the first column
    Entringer5_4,  // entringer-5-4: Entringer numbers by rows
    Entringer5_5,  // entringer-5-5: secant/tangent pair rows (lengths 1,3,5,...)
    Entringer5_6,  // entringer-5-6: permuted Entringer rows
};

enum class SequenceId {
    Motzkin,     // motzkin (from n = 0)
    Catalan,     // catalan (from n = 0)
    Tangent,     // tangent (from n = 1)
    Bernoulli,   // bernoulli (from n = 0)
    Secant,      // secant (from n = 0)
    Euler,       // euler (from n = 0)
    ZigzagBeta,  // beta (from n = 0)
    ZetaCoeff,   // zeta-coeff (from n = 1)
    BThm48,      // b-thm48 (from n = 3)
};

std::string_view triangle_name(TriangleId id);
std::optional<TriangleId> triangle_id_from_name(std::string_view name);
std::vector<TriangleId> all_triangle_ids();

std::string_view sequence_name(SequenceId id);
std::optional<SequenceId> sequence_id_from_name(std::string_view name);
std::vector<SequenceId> all_sequence_ids();

using AnyTriangle = std::variant<Triangle<Rational>, Triangle<Polynomial>>;

// The named triangle with `rows` rows (indices 0..rows-1), seed 1.
// Entringer5_5 yields rows of lengths 1, 3, 5, ... instead of the
// standard staircase shape.
AnyTriangle named_triangle(TriangleId id, int rows, int cap = kDefaultTriangleRowCap);

// Odd derivative of tan at 0: |B_{2n}| 4^n (4^n - 1) / (2n), n >= 1.
BigInt tangent_number(int n);

// Bernoulli numbers by the classical recurrence; B_0 = 1, B_1 = -1/2.
Rational bernoulli(int n);

// First component of the running matrix product behind the zeta
// formula: 3, 17, 155, ... for n = 3, 4, 5, ...
Rational thm48_b(int n);

// The (n-2) x (n-1) step matrix of that product, n >= 3.
Matrix<Rational> thm48_matrix(int n);

// The rational q_n with zeta(2n) = q_n pi^{2n}.
Rational zeta_even_coefficient(int n);

// B_{2n} = (-1)^{n+1} b_n / (2 (4^n - 1)), n >= 3.
Rational bernoulli_via_paths(int n);

// tan^{(2n-1)}(0) = 4^{n-1} b_n / n, n >= 3; the quotient is exact.
BigInt tangent_via_paths(int n);

// Entringer numbers by the row-sum recurrence E_{n+1,k+1} = sum of
// E_{n,j} for j = n-k..n, from E_{0,0} = 1 and E_{n,0} = 0.
BigInt entringer(int n, int k);

// Same numbers by the boustrophedon recurrence
// E_{n+1,k+1} = E_{n+1,k} + E_{n,n-k}; an independent second route.
BigInt entringer_boustrophedon(int n, int k);

// beta_{2n} = E_{2n,2n}: 1, 1, 5, 61, 1385, ...
BigInt secant_number(int n);

// 0 for odd n, (-1)^{n/2} times the secant number for even n.
BigInt euler_number(int n);

// The n x (n+1) Entringer step matrix: 1 where i + j > n.
Matrix<Rational> entringer_step_matrix(int n);

// The n x (n+2) matrix with entries min(j, i+1); products of consecutive
// Entringer step matrices.
Matrix<Rational> entringer_pair_matrix(int n);

// First-column polynomial of the flat-count triangle: sum over k of
// (paths of n steps with k flats) x^k; equals the n-th Motzkin number
// at x = 1.
Polynomial flat_count_poly(int n, int cap = kDefaultTriangleRowCap);

// First-column polynomial of the weighted flat-count triangle: sum of
// nu(path) x^{flats}; value (n+1)! at x = 1, and the (n+1)-st derivative
// of tan at 0 at x = 0 for even n.
Polynomial tangent_poly(int n, int cap = kDefaultTriangleRowCap);

// floor of tangent_poly(n) at x = 1/(n+1)!, which recovers the exact
// tangent value for even n.
BigInt floor_extract_tangent(int n, int cap = kDefaultTriangleRowCap);

// Smallest index at which a sequence is defined.
int sequence_first_index(SequenceId id);

// Term n of the sequence; integer-valued sequences render without "/1".
Rational sequence_term(SequenceId id, int n);

}  // namespace tforge

#endif
