#include "tforge/numerics.hpp"

#include <stdexcept>

namespace tforge {

Rational rational_make(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("division by zero");
    Rational r(num);
    r /= Rational(den);
    return r;
}

std::string to_text(const Rational& q) { return q.str(); }

std::string to_text(const BigInt& n) { return n.str(); }

BigInt rational_floor(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);  // always > 0
    BigInt quot = num / den;            // truncates toward zero
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return b;
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::divided_by_x() const {
    if (is_zero()) return {};
    if (coeffs_.front() != 0)
        throw std::domain_error("exact division by x failed: nonzero constant term");
    return Polynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return {};
    std::vector<Rational> out = p.coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    return Rational(-1) * *this;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        const Rational mag = negative ? Rational(-c) : c;
        if (k == 0) {
            out += tforge::to_text(mag);
        } else {
            if (mag != 1) out += tforge::to_text(mag);
            out += 'x';
            if (k > 1) out += '^' + std::to_string(k);
        }
    }
    return out;
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

}  // namespace tforge
