#include "tforge/verification.hpp"

#include "tforge/constructions.hpp"
#include "tforge/nu_rho.hpp"
#include "tforge/perm_oracle.hpp"
#include "tforge/triangle_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tforge {

bool VerifyReport::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.pass; });
}

Rational exact_xi_integral(int n, int cap) {
    if (n < 2) throw std::domain_error("integral defined for n >= 2");
    if (n - 2 > cap) throw std::domain_error("enumeration too large");
    Rational sum(0);
    for (const Path& p : enumerate_motzkin(n - 2, cap)) sum += weight_f(p);
    return sum / 6;
}

namespace {

// SplitMix64 finalizer; value i of the stream keyed by `seed` depends only
// on (seed, i), so sampling is reproducible under any partitioning.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_open(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t z = mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
    return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;  // strictly inside (0,1)
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

McEstimate mc_xi_integral(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 2) throw std::domain_error("integral defined for n >= 2");
    if (samples < 100) throw std::domain_error("need at least 100 samples");
    KahanSum sum;
    KahanSum sum_sq;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (int d = 0; d < n; ++d)
            x[static_cast<std::size_t>(d)] = unit_open(seed, i * static_cast<std::uint64_t>(n) +
                                                                  static_cast<std::uint64_t>(d));
        double xi = 1.0;
        for (int d = 0; d < n; ++d)
            xi *= std::min(x[static_cast<std::size_t>(d)],
                           x[static_cast<std::size_t>((d + 1) % n)]);
        sum.add(xi);
        sum_sq.add(xi * xi);
    }
    const double count = static_cast<double>(samples);
    const double mean = sum.sum / count;
    double variance = (sum_sq.sum - count * mean * mean) / (count - 1.0);
    if (variance < 0.0) variance = 0.0;
    return {mean, std::sqrt(variance / count), samples, seed};
}

namespace {

constexpr std::uint64_t kMcSeeds[4] = {0x243F6A8885A308D3ULL, 0x13198A2E03707344ULL,
                                       0xA4093822299F31D0ULL, 0x082EFA98EC4E6C89ULL};

struct Outcome {
    bool pass = false;
    std::string expected;
    std::string actual;
};

Outcome ok() { return {true, "all identities hold", "all identities hold"}; }

Outcome fail_at(const std::string& where, const std::string& expected, const std::string& actual) {
    return {false, expected, actual + " at " + where};
}

class SuiteRunner {
 public:
    void run(const std::string& name, const std::string& params,
             const std::function<Outcome()>& body) {
        CheckRecord rec;
        rec.name = name;
        rec.params = params;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = body();
            rec.pass = o.pass;
            rec.expected = o.expected;
            rec.actual = o.actual;
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.expected = "no exception";
            rec.actual = std::string("exception: ") + e.what();
        }
        rec.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        records.push_back(std::move(rec));
    }

    std::vector<CheckRecord> records;
};

// Enumerates all 3^n words over {-1,0,1} of length n in lexicographic order.
std::vector<Path> all_words(int n) {
    std::vector<Path> out;
    Path word(static_cast<std::size_t>(n), Step{-1});
    while (true) {
        out.push_back(word);
        int i = n - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == 1) {
            word[static_cast<std::size_t>(i)] = -1;
            --i;
        }
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    if (n == 0) out.assign(1, Path{});
    return out;
}

int trailing_down_run(const Path& p) {
    int run = 0;
    for (auto it = p.rbegin(); it != p.rend() && *it == -1; ++it) ++run;
    return run;
}

// Weight defined directly on paths by rewriting each path down to the
// one-step base per the flat/cusp recursion; independent of the engine.
Rational weight_by_rewriting(const Path& p, const std::function<Rational(int)>& flat_coeff,
                             const std::function<Rational(int)>& cusp_coeff,
                             const Rational& base_value) {
    if (p.size() == 1) return base_value;  // necessarily (0)
    const SuffixClass s = suffix_class(p);
    if (s.kind == TailKind::Flat) {
        Path q = p;
        q.erase(q.end() - 1 - s.run);  // drop the flat step before the down run
        return flat_coeff(s.run) * weight_by_rewriting(q, flat_coeff, cusp_coeff, base_value);
    }
    Path q = p;
    q[q.size() - 1 - static_cast<std::size_t>(s.run)] = 0;  // lower the cusp
    q.pop_back();
    return cusp_coeff(s.run) * weight_by_rewriting(q, flat_coeff, cusp_coeff, base_value);
}

const Triangle<Rational>& rational_triangle(const AnyTriangle& t) {
    return std::get<Triangle<Rational>>(t);
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

VerifyReport verify_suite(int depth, const VerifyOptions& options) {
    if (depth < 1 || depth > 3) throw std::domain_error("depth must be 1, 2 or 3");

    // depth-scaled caps: exhaustive word length and largest swept S_n
    const int word_cap = depth == 1 ? 6 : depth == 2 ? 8 : 10;
    const int perm_cap = depth == 1 ? 7 : depth == 2 ? 9 : 11;

    SuiteRunner suite;
    std::map<int, std::map<Path, std::uint64_t>> census_cache;
    const auto census = [&](int n) -> const std::map<Path, std::uint64_t>& {
        auto it = census_cache.find(n);
        if (it == census_cache.end())
            it = census_cache.emplace(n, phi_census(n, perm_cap)).first;
        return it->second;
    };
    const auto census_count = [](const std::map<Path, std::uint64_t>& c, const Path& p) {
        const auto it = c.find(p);
        return it == c.end() ? std::uint64_t{0} : it->second;
    };

    // ---- numerics ----

    suite.run("ring axioms hold for random rationals", "1000 triples, |entries| <= 10^6", [&] {
        std::mt19937_64 rng(0x5eed0001);
        std::uniform_int_distribution<long long> num(-1000000, 1000000);
        std::uniform_int_distribution<long long> den(1, 1000000);
        for (int trial = 0; trial < 1000; ++trial) {
            const Rational a = rational_make(num(rng), den(rng));
            const Rational b = rational_make(num(rng), den(rng));
            const Rational c = rational_make(num(rng), den(rng));
            const bool pass = (a + b) + c == a + (b + c) && a + b == b + a &&
                              (a * b) * c == a * (b * c) && a * b == b * a &&
                              a * (b + c) == a * b + a * c && a + Rational(0) == a &&
                              a * Rational(1) == a;
            if (!pass)
                return fail_at("trial " + std::to_string(trial), "ring axioms", "violated");
        }
        return ok();
    });

    suite.run("ring axioms hold for random polynomials", "1000 triples, degree <= 4", [&] {
        std::mt19937_64 rng(0x5eed0002);
        std::uniform_int_distribution<long long> num(-1000000, 1000000);
        std::uniform_int_distribution<long long> den(1, 1000000);
        std::uniform_int_distribution<int> deg(0, 4);
        const auto random_poly = [&] {
            std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& cf : coeffs) cf = rational_make(num(rng), den(rng));
            return Polynomial(std::move(coeffs));
        };
        for (int trial = 0; trial < 1000; ++trial) {
            const Polynomial a = random_poly();
            const Polynomial b = random_poly();
            const Polynomial c = random_poly();
            const bool pass = (a + b) + c == a + (b + c) && a + b == b + a &&
                              (a * b) * c == a * (b * c) && a * b == b * a &&
                              a * (b + c) == a * b + a * c && a + Polynomial(0) == a &&
                              a * Polynomial(1) == a;
            if (!pass)
                return fail_at("trial " + std::to_string(trial), "ring axioms", "violated");
        }
        return ok();
    });

    suite.run("rational construction is scale invariant", "500 random pairs", [&] {
        std::mt19937_64 rng(0x5eed0003);
        std::uniform_int_distribution<long long> any(-1000000, 1000000);
        for (int trial = 0; trial < 500; ++trial) {
            const BigInt a = any(rng);
            BigInt b = any(rng);
            if (b == 0) b = 1;
            BigInt k = any(rng);
            if (k == 0) k = -7;
            if (rational_make(a, b) != rational_make(k * a, k * b))
                return fail_at("trial " + std::to_string(trial), to_text(rational_make(a, b)),
                                to_text(rational_make(k * a, k * b)));
        }
        return ok();
    });

    suite.run("polynomial evaluation is a ring morphism", "500 random pairs", [&] {
        std::mt19937_64 rng(0x5eed0004);
        std::uniform_int_distribution<long long> num(-1000, 1000);
        std::uniform_int_distribution<long long> den(1, 1000);
        std::uniform_int_distribution<int> deg(0, 4);
        const auto random_poly = [&] {
            std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& cf : coeffs) cf = rational_make(num(rng), den(rng));
            return Polynomial(std::move(coeffs));
        };
        for (int trial = 0; trial < 500; ++trial) {
            const Polynomial p = random_poly();
            const Polynomial q = random_poly();
            const Rational x = rational_make(num(rng), den(rng));
            if (poly_eval(p + q, x) != poly_eval(p, x) + poly_eval(q, x) ||
                poly_eval(p * q, x) != poly_eval(p, x) * poly_eval(q, x))
                return fail_at("trial " + std::to_string(trial), "evaluation homomorphism",
                                "violated");
        }
        return ok();
    });

    // ---- paths ----

    suite.run("motzkin enumeration count matches motzkin numbers", "n <= 12", [&] {
        for (int n = 0; n <= 12; ++n) {
            const BigInt count = enumerate_motzkin(n).size();
            if (count != motzkin_number(n))
                return fail_at("n=" + std::to_string(n), to_text(motzkin_number(n)),
                                to_text(count));
        }
        return ok();
    });

    suite.run("dyck enumeration matches catalan numbers", "even n <= 16", [&] {
        for (int n = 0; n <= 16; n += 2) {
            const BigInt count = enumerate_dyck(n).size();
            if (count != catalan_number(n / 2))
                return fail_at("n=" + std::to_string(n), to_text(catalan_number(n / 2)),
                                to_text(count));
        }
        for (int n = 0; n <= 12; n += 2) {
            std::vector<Path> flat_free;
            for (const Path& p : enumerate_motzkin(n))
                if (count_zeros(p) == 0) flat_free.push_back(p);
            if (flat_free != enumerate_dyck(n))
                return fail_at("n=" + std::to_string(n), "flat-free motzkin subset",
                                "dyck enumeration differs");
        }
        return ok();
    });

    suite.run("flat insertion and cusp flattening stay motzkin", "n <= 8", [&] {
        for (int n = 0; n <= 8; ++n) {
            for (const Path& p : enumerate_motzkin(n)) {
                for (std::size_t pos = 0; pos <= p.size(); ++pos) {
                    const Path q = insert_flat(p, pos);
                    if (q.size() != p.size() + 1 || !is_motzkin(q))
                        return fail_at("insert at " + std::to_string(pos) + " in " +
                                            path_to_text(p),
                                        "motzkin path", path_to_text(q));
                }
                for (std::size_t pos = 0; pos + 1 < p.size(); ++pos) {
                    if (p[pos] != 1 || p[pos + 1] != -1) continue;
                    const Path q = flatten_cusp(p, pos);
                    if (q.size() + 1 != p.size() || !is_motzkin(q))
                        return fail_at("flatten at " + std::to_string(pos) + " in " +
                                            path_to_text(p),
                                        "motzkin path", path_to_text(q));
                }
            }
        }
        return ok();
    });

    suite.run("flat-count distribution matches closed form", "n <= 12", [&] {
        for (int n = 0; n <= 12; ++n) {
            std::vector<BigInt> histogram(static_cast<std::size_t>(n) + 1, BigInt(0));
            for (const Path& p : enumerate_motzkin(n))
                histogram[static_cast<std::size_t>(count_zeros(p))] += 1;
            for (int k = 0; k <= n; ++k)
                if (histogram[static_cast<std::size_t>(k)] != d_count(n, k))
                    return fail_at("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    to_text(d_count(n, k)),
                                    to_text(histogram[static_cast<std::size_t>(k)]));
        }
        return ok();
    });

    suite.run("motzkin equals binomial-weighted catalan sum", "n <= 30", [&] {
        for (int n = 0; n <= 30; ++n) {
            BigInt sum = 0;
            for (int k = 0; 2 * k <= n; ++k) sum += binomial(n, 2 * k) * catalan_number(k);
            if (sum != motzkin_number(n))
                return fail_at("n=" + std::to_string(n), to_text(motzkin_number(n)),
                                to_text(sum));
        }
        return ok();
    });

    suite.run("suffix class counts sum to motzkin numbers", "n <= 12", [&] {
        for (int n = 1; n <= 12; ++n) {
            const std::vector<BigInt> counts = suffix_counts(n);
            if (static_cast<int>(counts.size()) != n + 1)
                return fail_at("n=" + std::to_string(n), std::to_string(n + 1) + " classes",
                                std::to_string(counts.size()) + " classes");
            const BigInt total = std::accumulate(counts.begin(), counts.end(), BigInt(0));
            if (total != motzkin_number(n + 1))
                return fail_at("n=" + std::to_string(n), to_text(motzkin_number(n + 1)),
                                to_text(total));
        }
        return ok();
    });

    suite.run("suffix classification is total and faithful", "n <= 10", [&] {
        for (int n = 1; n <= 10; ++n) {
            for (const Path& p : enumerate_motzkin(n)) {
                const SuffixClass s = suffix_class(p);
                Path tail{s.kind == TailKind::Flat ? Step{0} : Step{1}};
                tail.insert(tail.end(), static_cast<std::size_t>(s.run), Step{-1});
                if (tail.size() > p.size() ||
                    !std::equal(tail.begin(), tail.end(), p.end() - static_cast<std::ptrdiff_t>(tail.size())))
                    return fail_at(path_to_text(p), "suffix matches class", "does not");
                if (s.kind == TailKind::Cusp && s.run < 1)
                    return fail_at(path_to_text(p), "cusp run >= 1", std::to_string(s.run));
            }
        }
        return ok();
    });

    // ---- triangle engine ----

    suite.run("catalan triangle satisfies the closed form", "n <= 20", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::CatalanEx5, 21));
        for (int n = 0; n <= 20; ++n)
            for (int m = 0; m <= n; ++m) {
                const Rational expected =
                    Rational(binomial(2 * n - m, n) * (m + 1)) / (n + 1);
                if (t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] != expected)
                    return fail_at("n=" + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(expected),
                                    to_text(t.rows[static_cast<std::size_t>(n)]
                                                  [static_cast<std::size_t>(m)]));
            }
        return ok();
    });

    suite.run("catalan triangle satisfies the row recurrence", "n <= 20", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::CatalanEx5, 21));
        for (int n = 0; n < 20; ++n)
            for (int m = 0; m <= n + 1; ++m) {
                Rational sum(0);
                for (int k = std::max(0, m - 1); k <= n; ++k)
                    sum += t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                if (t.rows[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(m)] != sum)
                    return fail_at("n=" + std::to_string(n + 1) + " m=" + std::to_string(m),
                                    to_text(sum),
                                    to_text(t.rows[static_cast<std::size_t>(n) + 1]
                                                  [static_cast<std::size_t>(m)]));
            }
        return ok();
    });

    suite.run("pascal triangle equals binomial coefficients", "n <= 20", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Pascal, 21));
        for (int n = 0; n <= 20; ++n)
            for (int m = 0; m <= n; ++m)
                if (t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] !=
                    Rational(binomial(n, m)))
                    return fail_at("n=" + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(binomial(n, m)), "differs");
        return ok();
    });

    suite.run("motzkin triangle first column gives motzkin numbers", "n <= 20", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::MotzkinEx4, 21));
        for (int n = 0; n <= 20; ++n)
            if (t.rows[static_cast<std::size_t>(n)][0] != Rational(motzkin_number(n)))
                return fail_at("n=" + std::to_string(n), to_text(motzkin_number(n)),
                                to_text(t.rows[static_cast<std::size_t>(n)][0]));
        return ok();
    });

    suite.run("power and factorial triangles match closed forms", "n <= 12", [&] {
        const auto powers = rational_triangle(named_triangle(TriangleId::Powers2Ex2, 13));
        const auto flats = rational_triangle(named_triangle(TriangleId::FlatEx1, 13));
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m) {
                BigInt two = 1;
                for (int i = 0; i < n - m; ++i) two *= 2;
                if (powers.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] !=
                    Rational(two))
                    return fail_at("powers n=" + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(two), "differs");
                if (flats.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] !=
                    Rational(factorial(n)))
                    return fail_at("flat n=" + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(factorial(n)), "differs");
            }
        return ok();
    });

    suite.run("weighted engine matches direct path sums", "n <= 10", [&] {
        // counting weight: every coefficient 1
        const auto count_triangle = rational_triangle(named_triangle(TriangleId::Cor2_4, 11));
        // preimage-count weight: flat 2(k+1), cusp (k+1)/2, base value 2
        const auto nu_triangle = rational_triangle(named_triangle(TriangleId::Cor4_6, 11));
        const auto flat_one = [](int) { return Rational(1); };
        const auto cusp_one = [](int) { return Rational(1); };
        const auto flat_nu = [](int k) { return Rational(2 * (k + 1)); };
        const auto cusp_nu = [](int k) { return rational_make(k + 1, 2); };
        for (int n = 1; n <= 10; ++n) {
            Rational count_sum(0);
            Rational nu_sum(0);
            for (const Path& p : enumerate_motzkin(n)) {
                count_sum += weight_by_rewriting(p, flat_one, cusp_one, Rational(1));
                const Rational w = weight_by_rewriting(p, flat_nu, cusp_nu, Rational(2));
                if (w != Rational(nu(p)))
                    return fail_at(path_to_text(p), to_text(nu(p)), to_text(w));
                nu_sum += w;
            }
            // seed_value * t_{n,0} / flat(0) recovers the path sum
            const Rational count_engine =
                Rational(1) * count_triangle.rows[static_cast<std::size_t>(n)][0] / Rational(1);
            const Rational nu_engine =
                Rational(2) * nu_triangle.rows[static_cast<std::size_t>(n)][0] / Rational(2);
            if (count_engine != count_sum)
                return fail_at("count n=" + std::to_string(n), to_text(count_sum),
                                to_text(count_engine));
            if (nu_engine != nu_sum)
                return fail_at("nu n=" + std::to_string(n), to_text(nu_sum),
                                to_text(nu_engine));
        }
        return ok();
    });

    suite.run("polynomial ring instantiation matches rational engine", "n <= 12", [&] {
        // the flat-count step matrix at x = 1 is the suffix-count matrix
        const auto poly_t = generate_triangle<Polynomial>(
            [](int i, int j) {
                if (j == 1) return Polynomial(1);
                if (j % 2 == 1) return Polynomial(i >= j - 1 ? 1 : 0);
                return Polynomial(i == j - 1 ? 1 : 0);
            },
            Polynomial(1), 12);
        const auto rational_t = rational_triangle(named_triangle(TriangleId::Cor2_4, 13));
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m) {
                const Rational value = poly_eval(
                    poly_t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)],
                    Rational(1));
                if (value !=
                    rational_t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)])
                    return fail_at("n=" + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(rational_t.rows[static_cast<std::size_t>(n)]
                                                           [static_cast<std::size_t>(m)]),
                                    to_text(value));
            }
        return ok();
    });

    // ---- permutation oracle ----

    suite.run("phi image is exactly the motzkin set",
              "words of length <= " + std::to_string(std::min(6, word_cap)), [&] {
        for (int n = 1; n <= std::min(6, word_cap); ++n) {
            const auto& c = census(n);
            for (const Path& word : all_words(n)) {
                const bool has_preimage = census_count(c, word) > 0;
                if (has_preimage != is_motzkin(word))
                    return fail_at(path_to_text(word),
                                    is_motzkin(word) ? "preimages exist" : "no preimages",
                                    has_preimage ? "preimages exist" : "no preimages");
            }
        }
        return ok();
    });

    suite.run("fast preimage counts equal brute force on all words",
              "words of length <= " + std::to_string(word_cap), [&] {
        for (int n = 1; n <= word_cap; ++n) {
            const auto& c = census(n);
            for (const Path& word : all_words(n))
                if (nu(word) != BigInt(census_count(c, word)))
                    return fail_at(path_to_text(word), to_text(BigInt(census_count(c, word))),
                                    to_text(nu(word)));
        }
        return ok();
    });

    suite.run("preimage counts partition the symmetric group",
              "n <= " + std::to_string(perm_cap - 1), [&] {
        for (int n = 1; n <= perm_cap - 1; ++n) {
            BigInt total = 0;
            for (const auto& [word, count] : census(n)) total += count;
            if (total != factorial(n + 1))
                return fail_at("n=" + std::to_string(n), to_text(factorial(n + 1)),
                                to_text(total));
        }
        return ok();
    });

    suite.run("sum nu over M_7 = 8!", "fast recursion", [&] {
        BigInt total = 0;
        for (const Path& p : enumerate_motzkin(7)) total += nu(p);
        if (total != factorial(8)) return fail_at("n=7", to_text(factorial(8)), to_text(total));
        return ok();
    });

    suite.run("dyck preimages are the descent-start alternating permutations",
              "S_{2n+1} with 2n+1 <= " + std::to_string(perm_cap), [&] {
        for (int n = 1; 2 * n + 1 <= perm_cap; ++n) {
            Permutation sigma(static_cast<std::size_t>(2 * n + 1));
            std::iota(sigma.begin(), sigma.end(), 1);
            BigInt alternating_count = 0;
            do {
                const Path image = phi(sigma);
                const bool dyck = is_motzkin(image) && count_zeros(image) == 0;
                const bool alt = sigma[0] > sigma[1] && is_alternating(sigma);
                if (dyck != alt)
                    return fail_at(permutation_to_text(sigma),
                                    alt ? "alternating descent start" : "not alternating",
                                    dyck ? "dyck image" : "non-dyck image");
                if (alt) ++alternating_count;
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            BigInt nu_sum = 0;
            for (const Path& p : enumerate_dyck(2 * n)) nu_sum += nu(p);
            if (nu_sum != alternating_count)
                return fail_at("n=" + std::to_string(n), to_text(alternating_count),
                                to_text(nu_sum));
        }
        return ok();
    });

    suite.run("entringer recurrences agree with brute force",
              "n <= " + std::to_string(std::min(7, perm_cap - 1)), [&] {
        for (int n = 0; n <= std::min(7, perm_cap - 1); ++n)
            for (int k = 0; k <= n; ++k) {
                const BigInt by_rows = entringer(n, k);
                const BigInt by_zigzag = entringer_boustrophedon(n, k);
                const BigInt by_sweep = entringer_bruteforce(n, k, perm_cap);
                if (by_rows != by_zigzag || by_rows != by_sweep)
                    return fail_at("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    to_text(by_sweep),
                                    to_text(by_rows) + "/" + to_text(by_zigzag));
            }
        return ok();
    });

    suite.run("diagonal entringer numbers equal zig-zag counts",
              "n <= " + std::to_string(std::min(8, perm_cap)), [&] {
        for (int n = 0; n <= std::min(8, perm_cap); ++n)
            if (entringer(n, n) != beta_bruteforce(n, perm_cap))
                return fail_at("n=" + std::to_string(n),
                                to_text(beta_bruteforce(n, perm_cap)),
                                to_text(entringer(n, n)));
        return ok();
    });

    // ---- preimage counts and the product weight ----

    suite.run("suffix shortcuts match the recursion", "paths of length <= 10", [&] {
        for (int n = 1; n <= 10; ++n) {
            for (const Path& p : enumerate_motzkin(n)) {
                const int run = trailing_down_run(p);
                for (int k = 0; k <= run; ++k) {
                    Path head(p.begin(), p.end() - k);  // p = (head, -1^k)
                    Path flat = head;
                    flat.push_back(0);
                    flat.insert(flat.end(), static_cast<std::size_t>(k), Step{-1});
                    if (nu(flat) != nu_suffix_flat(nu(p), k))
                        return fail_at("flat " + path_to_text(p) + " k=" + std::to_string(k),
                                        to_text(nu(flat)), to_text(nu_suffix_flat(nu(p), k)));
                    if (k >= 1) {
                        Path cusp = head;
                        cusp.push_back(1);
                        cusp.insert(cusp.end(), static_cast<std::size_t>(k), Step{-1});
                        Path shorter = head;  // (head, -1^{k-1})
                        shorter.insert(shorter.end(), static_cast<std::size_t>(k) - 1, Step{-1});
                        if (nu(cusp) != BigInt(k) * (k + 1) * nu(shorter))
                            return fail_at("cusp " + path_to_text(p) + " k=" + std::to_string(k),
                                            to_text(nu(cusp)),
                                            to_text(BigInt(k) * (k + 1) * nu(shorter)));
                        Path flat_shorter = head;  // (head, 0, -1^{k-1})
                        flat_shorter.push_back(0);
                        flat_shorter.insert(flat_shorter.end(), static_cast<std::size_t>(k) - 1,
                                            Step{-1});
                        if (nu(cusp) != nu_suffix_cusp(nu(flat_shorter), k))
                            return fail_at("cusp-from-flat " + path_to_text(p) +
                                                " k=" + std::to_string(k),
                                            to_text(nu(cusp)),
                                            to_text(nu_suffix_cusp(nu(flat_shorter), k)));
                    }
                }
            }
        }
        return ok();
    });

    suite.run("product weight suffix identities", "paths of length <= 10", [&] {
        const auto rising_product = [](int lo, int hi) {
            BigInt prod = 1;
            for (int v = lo; v <= hi; ++v) prod *= v;
            return prod;
        };
        for (int n = 0; n <= 10; ++n) {
            for (const Path& p : enumerate_motzkin(n)) {
                const int run = trailing_down_run(p);
                for (int k = 0; k <= run; ++k) {
                    Path head(p.begin(), p.end() - k);
                    // appending a flat step before the down run
                    Path flat = head;
                    flat.push_back(0);
                    flat.insert(flat.end(), static_cast<std::size_t>(k), Step{-1});
                    if (rho(flat) != rho(head) * rising_product(2 * n + 5 - k, 2 * n + 5))
                        return fail_at("flat " + path_to_text(p) + " k=" + std::to_string(k),
                                        to_text(rho(flat)),
                                        to_text(rho(head) *
                                                rising_product(2 * n + 5 - k, 2 * n + 5)));
                    // the bare down run against the head
                    if (rho(p) != rho(head) * rising_product(2 * n + 4 - k, 2 * n + 3))
                        return fail_at("run " + path_to_text(p) + " k=" + std::to_string(k),
                                        to_text(rho(p)),
                                        to_text(rho(head) *
                                                rising_product(2 * n + 4 - k, 2 * n + 3)));
                }
                // raising the final flat of a flat-tailed path into a cusp;
                // the run index is one larger than the flat tail's
                if (!p.empty() && suffix_class(p).kind == TailKind::Flat) {
                    const int k = suffix_class(p).run + 1;
                    Path head(p.begin(), p.end() - k);  // drops the flat and its down run
                    Path cusp = head;
                    cusp.push_back(1);
                    cusp.insert(cusp.end(), static_cast<std::size_t>(k), Step{-1});
                    if (rho(cusp) != rho(head) * rising_product(2 * n + 5 - k, 2 * n + 5))
                        return fail_at("cusp " + path_to_text(p), to_text(rho(cusp)),
                                        to_text(rho(head) *
                                                rising_product(2 * n + 5 - k, 2 * n + 5)));
                }
            }
        }
        return ok();
    });

    suite.run("weight sums over short paths", "n = 1, 2", [&] {
        Rational m1(0);
        for (const Path& p : enumerate_motzkin(1)) m1 += weight_f(p);
        if (m1 != rational_make(2, 5)) return fail_at("n=1", "2/5", to_text(m1));
        Rational m2(0);
        for (const Path& p : enumerate_motzkin(2)) m2 += weight_f(p);
        if (m2 != rational_make(17, 105)) return fail_at("n=2", "17/105", to_text(m2));
        return ok();
    });

    suite.run("product weight ends at 2n+3 on motzkin paths", "n <= 12", [&] {
        for (int n = 1; n <= 12; ++n)
            for (const Path& p : enumerate_motzkin(n)) {
                Path prefix(p.begin(), p.end() - 1);
                if (rho(p) != rho(prefix) * (2 * n + 3))
                    return fail_at(path_to_text(p), "last factor " + std::to_string(2 * n + 3),
                                    "differs");
            }
        return ok();
    });

    // ---- named constructions ----

    suite.run("tangent triangle first column gives tangent numbers", "n <= 12", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Thm1_1, 12));
        for (int n = 0; n < 12; ++n)
            if (t.rows[static_cast<std::size_t>(n)][0] != Rational(tangent_number(n + 1)))
                return fail_at("row " + std::to_string(n), to_text(tangent_number(n + 1)),
                                to_text(t.rows[static_cast<std::size_t>(n)][0]));
        return ok();
    });

    suite.run("suffix-count triangle matches counts and motzkin numbers", "n <= 20", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Cor2_4, 21));
        for (int n = 0; n <= 20; ++n)
            if (t.rows[static_cast<std::size_t>(n)][0] != Rational(motzkin_number(n)))
                return fail_at("first column n=" + std::to_string(n),
                                to_text(motzkin_number(n)),
                                to_text(t.rows[static_cast<std::size_t>(n)][0]));
        for (int n = 1; n <= 10; ++n) {
            const std::vector<BigInt> counts = suffix_counts(n);
            for (int m = 0; m <= n; ++m)
                if (t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] !=
                    Rational(counts[static_cast<std::size_t>(m)]))
                    return fail_at("row " + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(counts[static_cast<std::size_t>(m)]), "differs");
        }
        return ok();
    });

    suite.run("factorial triangle first column", "n <= 12", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Cor4_6, 13));
        for (int n = 0; n <= 12; ++n)
            if (t.rows[static_cast<std::size_t>(n)][0] != Rational(factorial(n + 1)))
                return fail_at("n=" + std::to_string(n), to_text(factorial(n + 1)),
                                to_text(t.rows[static_cast<std::size_t>(n)][0]));
        return ok();
    });

    suite.run("flat-count polynomials match the closed form", "n <= 12", [&] {
        for (int n = 0; n <= 12; ++n) {
            const Polynomial p = flat_count_poly(n);
            for (int k = 0; k <= n; ++k)
                if (p.coefficient(static_cast<std::size_t>(k)) != Rational(d_count(n, k)))
                    return fail_at("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    to_text(d_count(n, k)),
                                    to_text(p.coefficient(static_cast<std::size_t>(k))));
            if (p.degree() > n)
                return fail_at("n=" + std::to_string(n), "degree <= n",
                                "degree " + std::to_string(p.degree()));
            if (poly_eval(p, Rational(1)) != Rational(motzkin_number(n)))
                return fail_at("n=" + std::to_string(n) + " at x=1",
                                to_text(motzkin_number(n)),
                                to_text(poly_eval(p, Rational(1))));
        }
        return ok();
    });

    suite.run("tangent polynomial endpoints", "n <= 12", [&] {
        for (int n = 0; n <= 12; ++n) {
            const Polynomial p = tangent_poly(n);
            if (poly_eval(p, Rational(1)) != Rational(factorial(n + 1)))
                return fail_at("n=" + std::to_string(n) + " at x=1",
                                to_text(factorial(n + 1)),
                                to_text(poly_eval(p, Rational(1))));
            const Rational at_zero = poly_eval(p, Rational(0));
            const Rational expected =
                n % 2 == 0 ? Rational(tangent_number((n + 2) / 2)) : Rational(0);
            if (at_zero != expected)
                return fail_at("n=" + std::to_string(n) + " at x=0", to_text(expected),
                                to_text(at_zero));
        }
        return ok();
    });

    suite.run("tangent polynomial coefficients match preimage sums",
              "n <= " + std::to_string(std::min(8, perm_cap - 1)), [&] {
        for (int n = 1; n <= std::min(8, perm_cap - 1); ++n) {
            const Polynomial p = tangent_poly(n);
            std::vector<BigInt> sums(static_cast<std::size_t>(n) + 1, BigInt(0));
            for (const auto& [word, count] : census(n))
                sums[static_cast<std::size_t>(count_zeros(word))] += count;
            for (int k = 0; k <= n; ++k)
                if (p.coefficient(static_cast<std::size_t>(k)) !=
                    Rational(sums[static_cast<std::size_t>(k)]))
                    return fail_at("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    to_text(sums[static_cast<std::size_t>(k)]),
                                    to_text(p.coefficient(static_cast<std::size_t>(k))));
        }
        return ok();
    });

    suite.run("floor extraction recovers tangent values", "even n <= 10", [&] {
        for (int n = 0; n <= 10; n += 2) {
            const BigInt expected = tangent_number((n + 2) / 2);
            if (floor_extract_tangent(n) != expected)
                return fail_at("n=" + std::to_string(n), to_text(expected),
                                to_text(floor_extract_tangent(n)));
        }
        return ok();
    });

    suite.run("entringer triangle rows", "n <= 10", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Entringer5_4, 11));
        for (int n = 0; n <= 10; ++n)
            for (int m = 0; m <= n; ++m)
                if (t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] !=
                    Rational(entringer(n + 1, m + 1)))
                    return fail_at("n=" + std::to_string(n) + " m=" + std::to_string(m),
                                    to_text(entringer(n + 1, m + 1)), "differs");
        const int brute_max = std::min(7, perm_cap - 1);
        for (int n = 0; n <= brute_max; ++n) {
            if (t.rows[static_cast<std::size_t>(n)][0] !=
                Rational(beta_bruteforce(n, perm_cap)))
                return fail_at("row start n=" + std::to_string(n),
                                to_text(beta_bruteforce(n, perm_cap)), "differs");
            if (t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] !=
                Rational(beta_bruteforce(n + 1, perm_cap)))
                return fail_at("row end n=" + std::to_string(n),
                                to_text(beta_bruteforce(n + 1, perm_cap)), "differs");
        }
        return ok();
    });

    suite.run("secant/tangent pair rows and the pairing identity", "n <= 8", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Entringer5_5, 6));
        for (int n = 1; n <= 6; ++n) {
            const auto& row = t.rows[static_cast<std::size_t>(n) - 1];
            if (static_cast<int>(row.size()) != 2 * n - 1)
                return fail_at("row " + std::to_string(n),
                                std::to_string(2 * n - 1) + " entries",
                                std::to_string(row.size()) + " entries");
            if (row.front() != Rational(secant_number(n - 1)))
                return fail_at("row " + std::to_string(n) + " start",
                                to_text(secant_number(n - 1)), to_text(row.front()));
            if (row.back() != Rational(tangent_number(n)))
                return fail_at("row " + std::to_string(n) + " end",
                                to_text(tangent_number(n)), to_text(row.back()));
        }
        for (int n = 1; n <= 8; ++n) {
            const auto product =
                multiply(entringer_step_matrix(2 * n - 1), entringer_step_matrix(2 * n));
            if (!(product == entringer_pair_matrix(2 * n - 1)))
                return fail_at("n=" + std::to_string(n), "pair matrix equals product",
                                "differs");
        }
        return ok();
    });

    suite.run("permuted entringer rows", "n <= 10", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Entringer5_6, 11));
        for (int n = 0; n <= 10; ++n) {
            const auto& row = t.rows[static_cast<std::size_t>(n)];
            if (row[0] != Rational(entringer(n + 1, n + 1)))
                return fail_at("n=" + std::to_string(n) + " start",
                                to_text(entringer(n + 1, n + 1)), to_text(row[0]));
            std::vector<Rational> expected;
            for (int k = 1; k <= n + 1; ++k) expected.push_back(Rational(entringer(n + 1, k)));
            std::vector<Rational> actual(row.begin(), row.end());
            for (int k = 0; 2 * k <= n; ++k)
                if (row[static_cast<std::size_t>(2 * k)] !=
                    Rational(entringer(n + 1, n + 1 - k)))
                    return fail_at("n=" + std::to_string(n) + " even m=" + std::to_string(2 * k),
                                    to_text(entringer(n + 1, n + 1 - k)), "differs");
            for (int k = 0; 2 * k + 1 <= n; ++k)
                if (row[static_cast<std::size_t>(2 * k + 1)] !=
                    Rational(entringer(n + 1, k + 1)))
                    return fail_at("n=" + std::to_string(n) + " odd m=" + std::to_string(2 * k + 1),
                                    to_text(entringer(n + 1, k + 1)), "differs");
            std::sort(expected.begin(), expected.end());
            std::sort(actual.begin(), actual.end());
            if (expected != actual)
                return fail_at("n=" + std::to_string(n), "row is a permutation", "differs");
        }
        return ok();
    });

    suite.run("tangent numbers agree across methods", "n <= 12", [&] {
        const auto t = rational_triangle(named_triangle(TriangleId::Thm1_1, 12));
        for (int n = 1; n <= 12; ++n) {
            const BigInt reference = tangent_number(n);
            if (t.rows[static_cast<std::size_t>(n) - 1][0] != Rational(reference))
                return fail_at("triangle n=" + std::to_string(n), to_text(reference),
                                to_text(t.rows[static_cast<std::size_t>(n) - 1][0]));
            if (entringer(2 * n - 1, 2 * n - 1) != reference)
                return fail_at("entringer n=" + std::to_string(n), to_text(reference),
                                to_text(entringer(2 * n - 1, 2 * n - 1)));
            if (n >= 3 && tangent_via_paths(n) != reference)
                return fail_at("paths n=" + std::to_string(n), to_text(reference),
                                to_text(tangent_via_paths(n)));
        }
        return ok();
    });

    suite.run("bernoulli numbers agree across methods", "3 <= n <= 12", [&] {
        for (int n = 3; n <= 12; ++n)
            if (bernoulli_via_paths(n) != bernoulli(2 * n))
                return fail_at("n=" + std::to_string(n), to_text(bernoulli(2 * n)),
                                to_text(bernoulli_via_paths(n)));
        return ok();
    });

    suite.run("bernoulli values match the classical list", "B_0..B_6 and odd zeros", [&] {
        const char* expected[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"};
        for (int n = 0; n <= 6; ++n)
            if (to_text(bernoulli(n)) != expected[n])
                return fail_at("n=" + std::to_string(n), expected[n], to_text(bernoulli(n)));
        for (int n = 3; n <= 19; n += 2)
            if (bernoulli(n) != 0)
                return fail_at("n=" + std::to_string(n), "0", to_text(bernoulli(n)));
        return ok();
    });

    suite.run("zeta(8) coefficient = 1/9450", "exact", [&] {
        if (zeta_even_coefficient(4) != rational_make(1, 9450))
            return fail_at("n=4", "1/9450", to_text(zeta_even_coefficient(4)));
        return ok();
    });

    suite.run("zeta coefficients invert the running product", "3 <= n <= 12", [&] {
        const char* low[] = {"", "1/6", "1/90", "1/945", "1/9450"};
        for (int n = 1; n <= 4; ++n)
            if (to_text(zeta_even_coefficient(n)) != low[n])
                return fail_at("n=" + std::to_string(n), low[n],
                                to_text(zeta_even_coefficient(n)));
        for (int n = 3; n <= 12; ++n) {
            BigInt four_n = 1;
            for (int i = 0; i < n; ++i) four_n *= 4;
            const Rational recovered = zeta_even_coefficient(n) * factorial(2 * n) *
                                       (four_n - 1) / Rational(four_n / 4);
            if (recovered != thm48_b(n))
                return fail_at("n=" + std::to_string(n), to_text(thm48_b(n)),
                                to_text(recovered));
        }
        return ok();
    });

    suite.run("secant numbers", "1, 1, 5, 61, 1385", [&] {
        const BigInt expected[] = {1, 1, 5, 61, 1385};
        for (int n = 0; n <= 4; ++n)
            if (secant_number(n) != expected[n])
                return fail_at("n=" + std::to_string(n), to_text(expected[n]),
                                to_text(secant_number(n)));
        for (int n = 0; 2 * n <= perm_cap; ++n)
            if (secant_number(n) != beta_bruteforce(2 * n, perm_cap))
                return fail_at("brute n=" + std::to_string(n),
                                to_text(beta_bruteforce(2 * n, perm_cap)),
                                to_text(secant_number(n)));
        return ok();
    });

    // ---- integral endpoints ----

    suite.run("exact integral values", "n = 2, 3, 4", [&] {
        if (exact_xi_integral(2) != rational_make(1, 6))
            return fail_at("n=2", "1/6", to_text(exact_xi_integral(2)));
        if (exact_xi_integral(3) != rational_make(1, 15))
            return fail_at("n=3", "1/15", to_text(exact_xi_integral(3)));
        if (exact_xi_integral(4) != rational_make(17, 630))
            return fail_at("n=4", "17/630", to_text(exact_xi_integral(4)));
        return ok();
    });

    suite.run("exact integral matches zeta coefficients", "2 <= n <= 10", [&] {
        for (int n = 2; n <= 10; ++n) {
            BigInt four_n = 1;
            for (int i = 0; i < n; ++i) four_n *= 4;
            if (zeta_even_coefficient(n) * (four_n - 1) != exact_xi_integral(n))
                return fail_at("n=" + std::to_string(n), to_text(exact_xi_integral(n)),
                                to_text(Rational(zeta_even_coefficient(n) * (four_n - 1))));
        }
        return ok();
    });

    {
        const std::uint64_t samples = options.mc_samples.value_or(
            depth == 1 ? 200000ULL : depth == 2 ? 1000000ULL : 4000000ULL);
        std::vector<std::uint64_t> seeds;
        if (options.mc_seed) {
            for (std::uint64_t i = 0; i < 4; ++i) seeds.push_back(*options.mc_seed + i);
        } else {
            seeds.assign(std::begin(kMcSeeds), std::end(kMcSeeds));
        }
        const int max_n = depth == 1 ? 3 : depth == 2 ? 4 : 5;

        suite.run("monte carlo estimates match exact integrals",
                  "n <= " + std::to_string(max_n) + ", " + std::to_string(samples) +
                      " samples, 3 of 4 seeds within 4 sigma", [&] {
            for (int n = 2; n <= max_n; ++n) {
                const double exact =
                    static_cast<double>(numerator(exact_xi_integral(n)).convert_to<double>() /
                                        denominator(exact_xi_integral(n)).convert_to<double>());
                int within = 0;
                double worst = 0.0;
                for (const std::uint64_t seed : seeds) {
                    const McEstimate e = mc_xi_integral(n, samples, seed);
                    const double sigmas = std::abs(e.estimate - exact) / e.standard_error;
                    worst = std::max(worst, sigmas);
                    if (sigmas < 4.0) ++within;
                }
                if (within < 3)
                    return fail_at("n=" + std::to_string(n), ">= 3 seeds within 4 sigma",
                                    std::to_string(within) + " within, worst " +
                                        format_double(worst) + " sigma");
            }
            return ok();
        });

        suite.run("monte carlo estimates are deterministic", "same seed, bit-identical", [&] {
            const McEstimate a = mc_xi_integral(3, 10000, seeds[0]);
            const McEstimate b = mc_xi_integral(3, 10000, seeds[0]);
            if (a.estimate != b.estimate || a.standard_error != b.standard_error)
                return fail_at("n=3", format_double(a.estimate), format_double(b.estimate));
            const McEstimate c = mc_xi_integral(3, 10000, seeds[0] + 1);
            if (c.estimate == a.estimate)
                return fail_at("n=3", "different seeds differ", "identical estimates");
            return ok();
        });
    }

    // hidden hook so the failure path of the report machinery stays testable
    if (std::getenv("TRIANGLE_FORGE_FORCE_VERIFY_FAIL") != nullptr) {
        CheckRecord rec;
        rec.name = "forced failure (test hook)";
        rec.params = "TRIANGLE_FORGE_FORCE_VERIFY_FAIL";
        rec.expected = "unset";
        rec.actual = "set";
        rec.pass = false;
        rec.elapsed_s = 0.0;
        suite.records.push_back(std::move(rec));
    }

    std::sort(suite.records.begin(), suite.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    VerifyReport report;
    report.records = std::move(suite.records);
    return report;
}

}  // namespace tforge
