#include "tforge/constructions.hpp"

#include "tforge/paths.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace tforge {

namespace {

struct TriangleNameEntry {
    TriangleId id;
    std::string_view name;
};

constexpr std::array<TriangleNameEntry, 13> kTriangleNames{{
    {TriangleId::Pascal, "pascal"},
    {TriangleId::MotzkinEx4, "motzkin-ex4"},
    {TriangleId::CatalanEx5, "catalan-ex5"},
    {TriangleId::Powers2Ex2, "powers2-ex2"},
    {TriangleId::FlatEx1, "flat-ex1"},
    {TriangleId::Thm1_1, "thm-1-1"},
    {TriangleId::Cor2_4, "cor-2-4"},
    {TriangleId::Thm3_2Poly, "thm-3-2"},
    {TriangleId::Cor4_6, "cor-4-6"},
    {TriangleId::Thm5_3Poly, "thm-5-3"},
    {TriangleId::Entringer5_4, "entringer-5-4"},
    {TriangleId::Entringer5_5, "entringer-5-5"},
    {TriangleId::Entringer5_6, "entringer-5-6"},
}};

struct SequenceNameEntry {
    SequenceId id;
    std::string_view name;
};

constexpr std::array<SequenceNameEntry, 9> kSequenceNames{{
    {SequenceId::Motzkin, "motzkin"},
    {SequenceId::Catalan, "catalan"},
    {SequenceId::Tangent, "tangent"},
    {SequenceId::Bernoulli, "bernoulli"},
    {SequenceId::Secant, "secant"},
    {SequenceId::Euler, "euler"},
    {SequenceId::ZigzagBeta, "beta"},
    {SequenceId::ZetaCoeff, "zeta-coeff"},
    {SequenceId::BThm48, "b-thm48"},
}};

BigInt pow_int(int base, int exponent) {
    BigInt out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

void check_row_cap(int rows, int cap) {
    if (rows > cap) throw std::domain_error("row count exceeds cap");
}

}  // namespace

std::string_view triangle_name(TriangleId id) {
    for (const auto& e : kTriangleNames)
        if (e.id == id) return e.name;
    throw std::domain_error("unknown triangle id");
}

std::optional<TriangleId> triangle_id_from_name(std::string_view name) {
    for (const auto& e : kTriangleNames)
        if (e.name == name) return e.id;
    return std::nullopt;
}

std::vector<TriangleId> all_triangle_ids() {
    std::vector<TriangleId> out;
    for (const auto& e : kTriangleNames) out.push_back(e.id);
    return out;
}

std::string_view sequence_name(SequenceId id) {
    for (const auto& e : kSequenceNames)
        if (e.id == id) return e.name;
    throw std::domain_error("unknown sequence id");
}

std::optional<SequenceId> sequence_id_from_name(std::string_view name) {
    for (const auto& e : kSequenceNames)
        if (e.name == name) return e.id;
    return std::nullopt;
}

std::vector<SequenceId> all_sequence_ids() {
    std::vector<SequenceId> out;
    for (const auto& e : kSequenceNames) out.push_back(e.id);
    return out;
}

Matrix<Rational> entringer_step_matrix(int n) {
    Matrix<Rational> m(n, n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j)
            if (i + j > n) m.at(i, j) = 1;
    return m;
}

Matrix<Rational> entringer_pair_matrix(int n) {
    Matrix<Rational> m(n, n + 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 2; ++j) m.at(i, j) = std::min(j, i + 1);
    return m;
}

Matrix<Rational> thm48_matrix(int n) {
    if (n < 3) throw std::domain_error("matrix defined for n >= 3");
    Matrix<Rational> m(n - 2, n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        if (j % 2 == 1) {
            // the displayed matrices fill odd columns from row j-1 down
            for (int i = std::max(1, j - 1); i <= n - 2; ++i)
                m.at(i, j) = rational_make(BigInt(j + 1) * (4 * n - j + 1), 8);
        } else if (j - 1 <= n - 2) {
            m.at(j - 1, j) = rational_make(BigInt(j + 2) * (4 * n - j), 32);
        }
    }
    return m;
}

namespace {

Triangle<Rational> entringer_5_5_rows(int rows) {
    Triangle<Rational> t;
    if (rows <= 0) return t;
    t.rows.push_back({Rational(1)});
    for (int n = 1; n < rows; ++n)
        t.rows.push_back(multiply_row(t.rows.back(), entringer_pair_matrix(2 * n - 1)));
    return t;
}

}  // namespace

AnyTriangle named_triangle(TriangleId id, int rows, int cap) {
    if (rows < 0) throw std::domain_error("negative row count");
    check_row_cap(rows, cap);
    const int last = rows - 1;
    switch (id) {
        case TriangleId::Pascal:
            return generate_triangle<Rational>(
                [](int i, int j) { return Rational(i <= j && j <= i + 1 ? 1 : 0); }, Rational(1),
                last);
        case TriangleId::MotzkinEx4:
            return generate_triangle<Rational>(
                [](int i, int j) { return Rational(i - j <= 1 && j - i <= 1 ? 1 : 0); },
                Rational(1), last);
        case TriangleId::CatalanEx5:
            return generate_triangle<Rational>(
                [](int i, int j) { return Rational(j <= i + 1 ? 1 : 0); }, Rational(1), last);
        case TriangleId::Powers2Ex2:
            return generate_triangle<Rational>(
                [](int i, int j) {
                    if (i == 1 && j == 1) return Rational(2);
                    return Rational(j == i + 1 ? 1 : 0);
                },
                Rational(1), last);
        case TriangleId::FlatEx1:
            return generate_triangle<Rational>([](int, int) { return Rational(1); }, Rational(1),
                                               last);
        case TriangleId::Thm1_1:
            return dyck_weight_triangle(
                [](int, int k) { return Rational((k + 1) * (k + 2)); }, Rational(2), last);
        case TriangleId::Cor2_4:
            return motzkin_weight_triangle(
                {[](int, int) { return Rational(1); }, [](int, int) { return Rational(1); },
                 Rational(1)},
                last);
        case TriangleId::Cor4_6:
            return motzkin_weight_triangle(
                {[](int, int k) { return Rational(2 * (k + 1)); },
                 [](int, int k) { return rational_make(k + 1, 2); }, Rational(2)},
                last);
        case TriangleId::Thm3_2Poly:
            return motzkin_poly_triangle(
                [](int, int) { return Polynomial::variable(); },
                [](int, int) { return Rational(1); }, last);
        case TriangleId::Thm5_3Poly:
            return motzkin_poly_triangle(
                [](int, int k) { return Rational(2 * (k + 1)) * Polynomial::variable(); },
                [](int, int k) { return rational_make(k + 1, 2); }, last);
        case TriangleId::Entringer5_4:
            return generate_triangle_seq<Rational>(
                [](int n) { return entringer_step_matrix(n); }, Rational(1), last);
        case TriangleId::Entringer5_5:
            return entringer_5_5_rows(rows);
        case TriangleId::Entringer5_6:
            return generate_triangle<Rational>(
                [](int i, int j) {
                    const bool one = (i % 2 == 1 && i <= j) || (j % 2 == 1 && j <= i + 1);
                    return Rational(one ? 1 : 0);
                },
                Rational(1), last);
    }
    throw std::domain_error("unknown triangle id");
}

BigInt tangent_number(int n) {
    if (n < 1) throw std::domain_error("tangent numbers start at n = 1");
    const BigInt four_n = pow_int(4, n);
    const Rational value = abs(bernoulli(2 * n)) * four_n * (four_n - 1) / (2 * n);
    if (denominator(value) != 1) throw std::domain_error("tangent value not an integer");
    return numerator(value);
}

Rational bernoulli(int n) {
    if (n < 0) throw std::domain_error("negative index");
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b[static_cast<std::size_t>(n)];
}

Rational thm48_b(int n) {
    if (n < 3) throw std::domain_error("product starts at n = 3");
    std::vector<Rational> row{Rational(1)};
    for (int m = 3; m <= n; ++m) row = multiply_row(row, thm48_matrix(m));
    return row[0];
}

Rational zeta_even_coefficient(int n) {
    if (n < 1) throw std::domain_error("zeta coefficients start at n = 1");
    const BigInt four_n = pow_int(4, n);
    if (n < 3) {
        // the running product is empty below n = 3; fall back to the
        // classical Bernoulli identity zeta(2n) = |B_{2n}| (2pi)^{2n} / (2 (2n)!)
        return Rational(abs(bernoulli(2 * n)) * four_n) / (2 * factorial(2 * n));
    }
    return Rational(four_n / 4) / Rational(factorial(2 * n) * (four_n - 1)) * thm48_b(n);
}

Rational bernoulli_via_paths(int n) {
    if (n < 3) throw std::domain_error("path formula starts at n = 3");
    const Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
    return sign * thm48_b(n) / (2 * (pow_int(4, n) - 1));
}

BigInt tangent_via_paths(int n) {
    if (n < 3) throw std::domain_error("path formula starts at n = 3");
    const Rational value = Rational(pow_int(4, n - 1)) * thm48_b(n) / n;
    if (denominator(value) != 1) throw std::domain_error("tangent value not an integer");
    return numerator(value);
}

BigInt entringer(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("entringer index out of range");
    // row m holds E_{m,0..m}; E_{m,kk+1} = sum_{j=m-1-kk}^{m-1} E_{m-1,j}
    std::vector<BigInt> row{BigInt(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (int kk = 0; kk < m; ++kk) {
            BigInt sum = 0;
            for (int j = m - 1 - kk; j <= m - 1; ++j) sum += row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(kk) + 1] = sum;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt entringer_boustrophedon(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("entringer index out of range");
    std::vector<BigInt> row{BigInt(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (int kk = 1; kk <= m; ++kk)
            next[static_cast<std::size_t>(kk)] =
                next[static_cast<std::size_t>(kk) - 1] + row[static_cast<std::size_t>(m - kk)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt secant_number(int n) {
    if (n < 0) throw std::domain_error("negative index");
    return entringer(2 * n, 2 * n);
}

BigInt euler_number(int n) {
    if (n < 0) throw std::domain_error("negative index");
    if (n % 2 == 1) return 0;
    const BigInt magnitude = secant_number(n / 2);
    return (n / 2) % 2 == 0 ? magnitude : -magnitude;
}

namespace {

Polynomial poly_triangle_first_entry(TriangleId id, int n, int cap) {
    const AnyTriangle t = named_triangle(id, n + 1, cap);
    return std::get<Triangle<Polynomial>>(t).rows.at(static_cast<std::size_t>(n)).at(0);
}

}  // namespace

Polynomial flat_count_poly(int n, int cap) {
    if (n < 0) throw std::domain_error("negative index");
    return poly_triangle_first_entry(TriangleId::Thm3_2Poly, n, cap);
}

Polynomial tangent_poly(int n, int cap) {
    if (n < 0) throw std::domain_error("negative index");
    return poly_triangle_first_entry(TriangleId::Thm5_3Poly, n, cap);
}

BigInt floor_extract_tangent(int n, int cap) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("even index required");
    const Polynomial p = tangent_poly(n, cap);
    return rational_floor(p(rational_make(1, factorial(n + 1))));
}

int sequence_first_index(SequenceId id) {
    switch (id) {
        case SequenceId::Tangent:
        case SequenceId::ZetaCoeff:
            return 1;
        case SequenceId::BThm48:
            return 3;
        default:
            return 0;
    }
}

Rational sequence_term(SequenceId id, int n) {
    switch (id) {
        case SequenceId::Motzkin: return Rational(motzkin_number(n));
        case SequenceId::Catalan: return Rational(catalan_number(n));
        case SequenceId::Tangent: return Rational(tangent_number(n));
        case SequenceId::Bernoulli: return bernoulli(n);
        case SequenceId::Secant: return Rational(secant_number(n));
        case SequenceId::Euler: return Rational(euler_number(n));
        case SequenceId::ZigzagBeta: return Rational(entringer(n, n));
        case SequenceId::ZetaCoeff: return zeta_even_coefficient(n);
        case SequenceId::BThm48: return thm48_b(n);
    }
    throw std::domain_error("unknown sequence id");
}

}  // namespace tforge
