#include "tforge/perm_oracle.hpp"

#include "tforge/nu_rho.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace tforge;

TEST_CASE("neighbour profile map") {
    CHECK(phi(Permutation{2, 1, 4, 5, 3}) == Path{1, -1, 0, 0});
    CHECK(phi(Permutation{1, 2}) == Path{0});
    CHECK(phi(Permutation{2, 1}) == Path{0});
    CHECK(phi(Permutation{1, 2, 3}) == Path{0, 0});
    CHECK_THROWS_AS(phi(Permutation{1}), std::domain_error);
    CHECK_THROWS_AS(phi(Permutation{2, 2}), std::domain_error);
}

TEST_CASE("preimage counting by sweep") {
    CHECK(nu_bruteforce(Path{0}) == 2);
    CHECK(nu_bruteforce(Path{0, 0}) == 4);
    CHECK(nu_bruteforce(Path{1, 1}) == 0);
    CHECK(nu_bruteforce(Path{}) == 1);
    CHECK_THROWS_WITH(nu_bruteforce(Path(9, 0)), "brute-force cap exceeded");
    CHECK(nu_bruteforce(Path{1, 0, -1}) == 8);
    CHECK(nu_bruteforce(Path{1, 1, -1, -1}) == 12);
}

TEST_CASE("census sweeps match individual counts") {
    for (int n = 1; n <= 5; ++n) {
        const auto counts = phi_census(n);
        BigInt total = 0;
        for (const auto& [word, count] : counts) {
            CHECK(nu_bruteforce(word) == BigInt(count));
            CHECK(is_motzkin(word));
            total += count;
        }
        CHECK(total == factorial(n + 1));
    }
}

TEST_CASE("preimage counts partition the symmetric group") {
    for (int n = 1; n <= 7; ++n) {
        BigInt total = 0;
        for (const auto& [word, count] : phi_census(n)) total += count;
        CHECK(total == factorial(n + 1));
    }
}

TEST_CASE("image of the neighbour profile map is the motzkin set") {
    for (int n = 1; n <= 6; ++n) {
        const auto counts = phi_census(n);
        // every word of length n: positive count exactly on motzkin paths
        Path word(static_cast<std::size_t>(n), Step{-1});
        while (true) {
            const auto it = counts.find(word);
            const bool has_preimage = it != counts.end() && it->second > 0;
            CHECK(has_preimage == is_motzkin(word));
            int i = n - 1;
            while (i >= 0 && word[static_cast<std::size_t>(i)] == 1) {
                word[static_cast<std::size_t>(i)] = -1;
                --i;
            }
            if (i < 0) break;
            ++word[static_cast<std::size_t>(i)];
        }
    }
}

TEST_CASE("alternating predicate") {
    CHECK(is_alternating(Permutation{3, 1, 2}));
    CHECK_FALSE(is_alternating(Permutation{3, 2, 1}));
    CHECK(is_alternating(Permutation{1}));
    CHECK(is_alternating(Permutation{1, 2}));
    CHECK(is_alternating(Permutation{2, 1}));
    CHECK(is_alternating(Permutation{1, 3, 2, 4}));
    CHECK_FALSE(is_alternating(Permutation{1, 2, 4, 3}));
}

TEST_CASE("zig-zag counts") {
    CHECK(beta_bruteforce(0) == 1);
    CHECK(beta_bruteforce(1) == 1);
    CHECK(beta_bruteforce(2) == 1);
    CHECK(beta_bruteforce(3) == 2);
    CHECK(beta_bruteforce(4) == 5);
    CHECK(beta_bruteforce(5) == 16);
    CHECK(beta_bruteforce(6) == 61);
    CHECK_THROWS_WITH(beta_bruteforce(10), "brute-force cap exceeded");
    CHECK(beta_bruteforce(10, 10) == 50521);
}

TEST_CASE("alternating permutations split evenly by first comparison") {
    for (int n = 2; n <= 7; ++n) {
        Permutation sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 1);
        BigInt descent_start = 0;
        BigInt ascent_start = 0;
        do {
            if (!is_alternating(sigma)) continue;
            if (sigma[0] > sigma[1])
                ++descent_start;
            else
                ++ascent_start;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(descent_start == ascent_start);
        CHECK(descent_start == beta_bruteforce(n));
    }
}

TEST_CASE("entringer counts by sweep") {
    CHECK(entringer_bruteforce(4, 4) == 5);
    CHECK(entringer_bruteforce(1, 0) == 0);
    CHECK(entringer_bruteforce(5, 5) == 16);
    CHECK(entringer_bruteforce(0, 0) == 1);
    CHECK_THROWS_AS(entringer_bruteforce(3, 4), std::domain_error);
    CHECK_THROWS_WITH(entringer_bruteforce(9, 4), "brute-force cap exceeded");
}

TEST_CASE("entringer sweep satisfies the boustrophedon recurrence") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(entringer_bruteforce(n + 1, k + 1) ==
                  entringer_bruteforce(n + 1, k) + entringer_bruteforce(n, n - k));
}

TEST_CASE("diagonal entringer counts are the zig-zag numbers") {
    for (int n = 0; n <= 8; ++n)
        CHECK(entringer_bruteforce(n, n) == beta_bruteforce(n));
}

TEST_CASE("dyck preimages are exactly the descent-start alternating permutations") {
    for (int n = 1; n <= 3; ++n) {
        Permutation sigma(static_cast<std::size_t>(2 * n + 1));
        std::iota(sigma.begin(), sigma.end(), 1);
        BigInt alternating = 0;
        do {
            const Path image = phi(sigma);
            const bool dyck = is_motzkin(image) && count_zeros(image) == 0;
            const bool alt = sigma[0] > sigma[1] && is_alternating(sigma);
            CHECK(dyck == alt);
            if (alt) ++alternating;
        } while (std::next_permutation(sigma.begin(), sigma.end()));

        BigInt preimages = 0;
        for (const Path& p : enumerate_dyck(2 * n)) preimages += nu_bruteforce(p);
        CHECK(preimages == alternating);
        CHECK(preimages == beta_bruteforce(2 * n + 1));
    }
}

TEST_CASE("permutation text round trip") {
    CHECK(permutation_to_text(Permutation{2, 1, 4, 5, 3}) == "2,1,4,5,3");
    CHECK(parse_permutation("2,1,4,5,3") == Permutation{2, 1, 4, 5, 3});
    CHECK(parse_permutation("3 1 2") == Permutation{3, 1, 2});
    CHECK_THROWS_AS(parse_permutation("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
}
