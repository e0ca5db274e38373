#include "tforge/triangle_engine.hpp"

namespace tforge {

Matrix<Rational> motzkin_weight_matrix(const WeightRecursion& w, int n) {
    const Rational b0 = w.flat_coeff(n, 0);
    if (b0 == 0) throw std::domain_error("degenerate recursion");
    Matrix<Rational> m(n, n + 1);
    for (int i = 1; i <= n; ++i) {
        m.at(i, 1) = b0;
        for (int j = 3; j <= n + 1; j += 2) {
            const int k = (j - 1) / 2;
            if (i >= 2 * k) m.at(i, j) = w.flat_coeff(n, k);
        }
    }
    for (int j = 2; j <= n + 1; j += 2) {
        const int k = j / 2;
        m.at(2 * k - 1, j) = w.cusp_coeff(n, k);
    }
    return m;
}

Triangle<Rational> motzkin_weight_triangle(const WeightRecursion& w, int last_row) {
    return generate_triangle_seq<Rational>(
        [&w](int n) { return motzkin_weight_matrix(w, n); }, Rational(1), last_row);
}

Matrix<Rational> dyck_weight_matrix(const std::function<Rational(int, int)>& coeff, int n) {
    if (coeff(n, 0) == 0) throw std::domain_error("degenerate recursion");
    Matrix<Rational> m(n, n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i + 1; ++j) m.at(i, j) = coeff(n, j - 1);
    return m;
}

Triangle<Rational> dyck_weight_triangle(const std::function<Rational(int, int)>& coeff,
                                        const Rational& seed_value, int last_row) {
    (void)seed_value;  // carried externally; the triangle itself is seeded with 1
    return generate_triangle_seq<Rational>(
        [&coeff](int n) { return dyck_weight_matrix(coeff, n); }, Rational(1), last_row);
}

Triangle<Polynomial> motzkin_poly_triangle(
    const std::function<Polynomial(int n, int k)>& flat_coeff,
    const std::function<Rational(int n, int k)>& cusp_coeff_over_x, int last_row) {
    Triangle<Polynomial> t;
    if (last_row < 0) return t;
    t.rows.push_back({Polynomial(1)});

    // scaled[m] holds x times the true row entry; even-indexed entries are
    // divisible by x because they are weight sums over flat-tailed paths
    std::vector<Polynomial> scaled{Polynomial::variable()};
    for (int n = 1; n <= last_row; ++n) {
        if (flat_coeff(n, 0).is_zero()) throw std::domain_error("degenerate recursion");

        std::vector<Polynomial> suffix(scaled.size() + 1, Polynomial(0));
        for (std::size_t i = scaled.size(); i-- > 0;) suffix[i] = suffix[i + 1] + scaled[i];

        std::vector<Polynomial> next(static_cast<std::size_t>(n) + 1, Polynomial(0));
        next[0] = flat_coeff(n, 0) * suffix[0];
        for (int k = 1; 2 * k <= n; ++k)
            next[static_cast<std::size_t>(2 * k)] =
                flat_coeff(n, k) * suffix[static_cast<std::size_t>(2 * k - 1)];
        for (int k = 1; 2 * k - 1 <= n; ++k)
            next[static_cast<std::size_t>(2 * k - 1)] =
                (cusp_coeff_over_x(n, k) * scaled[static_cast<std::size_t>(2 * k - 2)])
                    .divided_by_x();

        std::vector<Polynomial> emitted = next;
        for (std::size_t m = 0; m < emitted.size(); m += 2)
            emitted[m] = emitted[m].divided_by_x();
        t.rows.push_back(std::move(emitted));
        scaled = std::move(next);
    }
    return t;
}

}  // namespace tforge
