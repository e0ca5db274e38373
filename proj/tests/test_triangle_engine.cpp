#include "tforge/triangle_engine.hpp"

#include "tforge/nu_rho.hpp"
#include "tforge/paths.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tforge;

namespace {

std::vector<std::vector<Rational>> rational_rows(
    const std::vector<std::vector<long long>>& values) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : values) {
        std::vector<Rational> cells;
        for (long long v : row) cells.emplace_back(v);
        out.push_back(std::move(cells));
    }
    return out;
}

// Weight of a path computed by rewriting its suffix down to the one-step
// base path; independent of the matrix engine.
Rational rewrite_weight(const Path& p, const std::function<Rational(int)>& flat,
                        const std::function<Rational(int)>& cusp, const Rational& base) {
    if (p.size() == 1) return base;
    const SuffixClass s = suffix_class(p);
    if (s.kind == TailKind::Flat) {
        Path q = p;
        q.erase(q.end() - 1 - s.run);
        return flat(s.run) * rewrite_weight(q, flat, cusp, base);
    }
    Path q = p;
    q[q.size() - 1 - static_cast<std::size_t>(s.run)] = 0;
    q.pop_back();
    return cusp(s.run) * rewrite_weight(q, flat, cusp, base);
}

}  // namespace

TEST_CASE("pascal triangle from the band matrix") {
    const auto t = generate_triangle<Rational>(
        [](int i, int j) { return Rational(i <= j && j <= i + 1 ? 1 : 0); }, Rational(1), 5);
    CHECK(t.rows[4] == std::vector<Rational>{1, 4, 6, 4, 1});
    CHECK(t.rows[5] == std::vector<Rational>{1, 5, 10, 10, 5, 1});
}

TEST_CASE("all-ones matrix gives constant factorial rows") {
    const auto t =
        generate_triangle<Rational>([](int, int) { return Rational(1); }, Rational(1), 4);
    for (std::size_t n = 0; n < t.rows.size(); ++n) {
        BigInt f = 1;
        for (std::size_t i = 2; i <= n; ++i) f *= i;
        for (const Rational& v : t.rows[n]) CHECK(v == Rational(f));
    }
}

TEST_CASE("shifted diagonal matrix gives powers of two") {
    const auto t = generate_triangle<Rational>(
        [](int i, int j) {
            if (i == 1 && j == 1) return Rational(2);
            return Rational(j == i + 1 ? 1 : 0);
        },
        Rational(1), 4);
    CHECK(t.rows ==
          rational_rows({{1}, {2, 1}, {4, 2, 1}, {8, 4, 2, 1}, {16, 8, 4, 2, 1}}));
}

TEST_CASE("matrix-sequence generation matches the fixed-matrix form") {
    const auto fixed = generate_triangle<Rational>(
        [](int i, int j) { return Rational(i <= j && j <= i + 1 ? 1 : 0); }, Rational(1), 8);
    const auto seq = generate_triangle_seq<Rational>(
        [](int n) {
            Matrix<Rational> m(n, n + 1);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n + 1; ++j)
                    if (i <= j && j <= i + 1) m.at(i, j) = 1;
            return m;
        },
        Rational(1), 8);
    CHECK(fixed == seq);
}

TEST_CASE("matrix-sequence generation validates shapes") {
    CHECK_THROWS_WITH(generate_triangle_seq<Rational>([](int) { return Matrix<Rational>(2, 3); },
                                                      Rational(1), 3),
                      "matrix shape mismatch at step 1: got 2x3, expected 1x2");
}

TEST_CASE("empty and single-row generation") {
    const auto none =
        generate_triangle<Rational>([](int, int) { return Rational(1); }, Rational(1), -1);
    CHECK(none.rows.empty());
    const auto seed_only =
        generate_triangle<Rational>([](int, int) { return Rational(1); }, Rational(7), 0);
    CHECK(seed_only.rows == std::vector<std::vector<Rational>>{{Rational(7)}});
}

TEST_CASE("weighted motzkin step matrix layout") {
    // unit weights give the suffix-count matrix pattern
    const WeightRecursion unit{[](int, int) { return Rational(1); },
                               [](int, int) { return Rational(1); }, Rational(1)};
    const Matrix<Rational> m = motzkin_weight_matrix(unit, 6);
    Matrix<Rational> expected(6, 7);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (j == 1 || (j % 2 == 1 && i >= j - 1)) expected.at(i, j) = 1;
            if (j % 2 == 0 && i == j - 1) expected.at(i, j) = 1;
        }
    CHECK(m == expected);
}

TEST_CASE("weighted motzkin triangle with unit weights counts suffix classes") {
    const WeightRecursion unit{[](int, int) { return Rational(1); },
                               [](int, int) { return Rational(1); }, Rational(1)};
    const auto t = motzkin_weight_triangle(unit, 5);
    CHECK(t.rows == rational_rows({{1},
                                   {1, 1},
                                   {2, 1, 1},
                                   {4, 2, 2, 1},
                                   {9, 4, 5, 2, 1},
                                   {21, 9, 12, 5, 3, 1}}));
    for (int n = 1; n <= 5; ++n) {
        const auto counts = suffix_counts(n);
        for (int m = 0; m <= n; ++m)
            CHECK(t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] ==
                  Rational(counts[static_cast<std::size_t>(m)]));
    }
}

TEST_CASE("weighted motzkin triangle with preimage-count weights") {
    const WeightRecursion w{[](int, int k) { return Rational(2 * (k + 1)); },
                            [](int, int k) { return rational_make(k + 1, 2); }, Rational(2)};
    const auto t = motzkin_weight_triangle(w, 5);
    for (int n = 0; n <= 5; ++n) {
        BigInt f = 1;
        for (int i = 2; i <= n + 1; ++i) f *= i;
        CHECK(t.rows[static_cast<std::size_t>(n)][0] == Rational(f));  // 1, 2, 6, 24, 120, 720
    }
    // the displayed step matrix: columns 2, 1, 0, 4, 3/2, 6, 2, ...
    const Matrix<Rational> m = motzkin_weight_matrix(w, 6);
    CHECK(m.at(1, 1) == 2);
    CHECK(m.at(1, 2) == 1);
    CHECK(m.at(2, 3) == 4);
    CHECK(m.at(3, 4) == rational_make(3, 2));
    CHECK(m.at(4, 5) == 6);
    CHECK(m.at(5, 6) == 2);
    CHECK(m.at(2, 2) == 0);
    CHECK(m.at(1, 3) == 0);
}

TEST_CASE("degenerate weight recursions are rejected") {
    const WeightRecursion zero{[](int, int) { return Rational(0); },
                               [](int, int) { return Rational(1); }, Rational(1)};
    CHECK_THROWS_WITH(motzkin_weight_triangle(zero, 3), "degenerate recursion");
    CHECK_THROWS_WITH(dyck_weight_triangle([](int, int) { return Rational(0); }, Rational(1), 3),
                      "degenerate recursion");
}

TEST_CASE("weighted dyck triangle with unit weights is the catalan triangle") {
    const auto t = dyck_weight_triangle([](int, int) { return Rational(1); }, Rational(1), 5);
    CHECK(t.rows == rational_rows({{1},
                                   {1, 1},
                                   {2, 2, 1},
                                   {5, 5, 3, 1},
                                   {14, 14, 9, 4, 1},
                                   {42, 42, 28, 14, 5, 1}}));
}

TEST_CASE("weighted dyck triangle with rising products gives tangent rows") {
    const auto t = dyck_weight_triangle(
        [](int, int k) { return Rational((k + 1) * (k + 2)); }, Rational(2), 4);
    CHECK(t.rows == rational_rows({{1},
                                   {2, 6},
                                   {16, 48, 72},
                                   {272, 816, 1440, 1440},
                                   {7936, 23808, 44352, 57600, 43200}}));
}

TEST_CASE("engine first column equals direct path sums") {
    const auto flat_one = [](int) { return Rational(1); };
    const auto cusp_one = [](int) { return Rational(1); };
    const auto flat_nu = [](int k) { return Rational(2 * (k + 1)); };
    const auto cusp_nu = [](int k) { return rational_make(k + 1, 2); };

    const WeightRecursion unit{[](int, int) { return Rational(1); },
                               [](int, int) { return Rational(1); }, Rational(1)};
    const WeightRecursion nu_weights{[](int, int k) { return Rational(2 * (k + 1)); },
                                     [](int, int k) { return rational_make(k + 1, 2); },
                                     Rational(2)};
    const auto count_triangle = motzkin_weight_triangle(unit, 10);
    const auto nu_triangle = motzkin_weight_triangle(nu_weights, 10);

    for (int n = 1; n <= 10; ++n) {
        Rational count_sum(0);
        Rational nu_sum(0);
        for (const Path& p : enumerate_motzkin(n)) {
            count_sum += rewrite_weight(p, flat_one, cusp_one, Rational(1));
            const Rational w = rewrite_weight(p, flat_nu, cusp_nu, Rational(2));
            CHECK(w == Rational(nu(p)));
            nu_sum += w;
        }
        // seed_value * t_{n,0} / flat(0) recovers the enumerated sum
        CHECK(Rational(1) * count_triangle.rows[static_cast<std::size_t>(n)][0] / Rational(1) ==
              count_sum);
        CHECK(Rational(2) * nu_triangle.rows[static_cast<std::size_t>(n)][0] / Rational(2) ==
              nu_sum);
    }
}

TEST_CASE("polynomial engine emits exact first-column polynomials") {
    // flat-count weights: flat steps carry x, cusps carry 1/x
    const auto t = motzkin_poly_triangle([](int, int) { return Polynomial::variable(); },
                                         [](int, int) { return Rational(1); }, 4);
    const Polynomial x = Polynomial::variable();
    CHECK(t.rows[0] == std::vector<Polynomial>{Polynomial(1)});
    CHECK(t.rows[1][0] == x);
    CHECK(t.rows[2][0] == x * x + Polynomial(1));
    CHECK(t.rows[3][0] == x * x * x + Rational(3) * x);
    CHECK(t.rows[4][0] == x * x * x * x + Rational(6) * x * x + Polynomial(2));
    // odd (cusp) columns are emitted scaled by x; row 1 column 1 is the
    // weight sum over the one cusp-tailed 2-step path
    CHECK(t.rows[1][1] == Polynomial(1));
    CHECK(t.rows[2][1] == x);
    CHECK(t.rows[2][2] == Polynomial(1));

    // the first column evaluated at 1 counts all paths
    for (int n = 0; n <= 4; ++n)
        CHECK(poly_eval(t.rows[static_cast<std::size_t>(n)][0], Rational(1)) ==
              Rational(motzkin_number(n)));
}

TEST_CASE("polynomial engine validates the flat coefficient") {
    CHECK_THROWS_WITH(motzkin_poly_triangle([](int, int) { return Polynomial(0); },
                                            [](int, int) { return Rational(1); }, 2),
                      "degenerate recursion");
}

TEST_CASE("matrix product helper") {
    Matrix<Rational> a(2, 3);
    a.at(1, 1) = 1; a.at(1, 2) = 2; a.at(1, 3) = 3;
    a.at(2, 1) = 4; a.at(2, 2) = 5; a.at(2, 3) = 6;
    Matrix<Rational> b(3, 2);
    b.at(1, 1) = 7; b.at(1, 2) = 8;
    b.at(2, 1) = 9; b.at(2, 2) = 10;
    b.at(3, 1) = 11; b.at(3, 2) = 12;
    const Matrix<Rational> c = multiply(a, b);
    CHECK(c.at(1, 1) == 58);
    CHECK(c.at(1, 2) == 64);
    CHECK(c.at(2, 1) == 139);
    CHECK(c.at(2, 2) == 154);
    CHECK_THROWS_AS(multiply(a, a), std::domain_error);
}
