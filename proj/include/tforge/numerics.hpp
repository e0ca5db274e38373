#ifndef TFORGE_NUMERICS_HPP
#define TFORGE_NUMERICS_HPP

// Exact arithmetic substrate: arbitrary-precision integers, canonical
// rationals, and rational-coefficient polynomials, plus the ring concept
// the triangle engine is generic over.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace tforge {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: lowest terms, positive denominator, unique zero.
using Rational = boost::multiprecision::cpp_rational;

// Value types with exact addition, multiplication, equality and 0/1
// constants. Satisfied by Rational and Polynomial.
template <typename R>
concept Ring = std::regular<R> && std::constructible_from<R, int> &&
    requires(const R a, const R b) {
        { a + b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
    };

// num/den in lowest terms with positive denominator.
// Throws std::domain_error("division by zero") when den == 0.
Rational rational_make(const BigInt& num, const BigInt& den);

// Canonical text: optional "-" plus digits for integers (no "/1" suffix),
// otherwise "p/q" in lowest terms.
std::string to_text(const Rational& q);
std::string to_text(const BigInt& n);

// Largest integer <= q (rounds toward minus infinity).
BigInt rational_floor(const Rational& q);

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Univariate polynomial with Rational coefficients, stored densely by
// ascending degree with no trailing zeros; the zero polynomial has an
// empty coefficient list and degree() == -1.
class Polynomial {
 public:
    Polynomial() = default;
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial variable();  // the monomial x

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const;

    // Exact Horner evaluation.
    Rational operator()(const Rational& x) const;

    // Exact division by x; throws std::domain_error if the constant term
    // is nonzero. Dividing the zero polynomial yields zero.
    Polynomial divided_by_x() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Human-readable form, highest degree first: "4x^2+2", "x^3-x+1/2".
    std::string to_text() const;

 private:
    std::vector<Rational> coeffs_;
    void trim();
};

Rational poly_eval(const Polynomial& p, const Rational& x);

}  // namespace tforge

#endif
