#include "tforge/perm_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tforge {

bool is_permutation(const Permutation& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Path phi(const Permutation& sigma) {
    if (sigma.size() < 2) throw std::domain_error("phi needs a permutation of size >= 2");
    if (!is_permutation(sigma)) throw std::domain_error("not a permutation of 1..n");
    const int n = static_cast<int>(sigma.size()) - 1;

    // list = 0, sigma(1), ..., sigma(n+1), 0
    std::vector<int> list(sigma.size() + 2, 0);
    std::vector<std::size_t> position(sigma.size() + 2, 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        list[i + 1] = sigma[i];
        position[static_cast<std::size_t>(sigma[i])] = i + 1;
    }

    Path out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const std::size_t at = position[static_cast<std::size_t>(j)];
        const int greater = (list[at - 1] > j ? 1 : 0) + (list[at + 1] > j ? 1 : 0);
        out[static_cast<std::size_t>(j - 1)] = static_cast<Step>(greater - 1);
    }
    return out;
}

namespace {

// Applies fn to every element of S_n in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    Permutation sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        fn(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

void check_sweep_cap(int group_size, int cap) {
    if (group_size > cap) throw std::domain_error("brute-force cap exceeded");
}

}  // namespace

BigInt nu_bruteforce(const Path& p, int cap) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return 1;
    check_sweep_cap(n + 1, cap);
    std::uint64_t count = 0;
    for_each_permutation(n + 1, [&](const Permutation& sigma) {
        if (phi(sigma) == p) ++count;
    });
    return count;
}

std::map<Path, std::uint64_t> phi_census(int n, int cap) {
    std::map<Path, std::uint64_t> counts;
    if (n == 0) {
        counts[Path{}] = 1;
        return counts;
    }
    check_sweep_cap(n + 1, cap);
    for_each_permutation(n + 1, [&](const Permutation& sigma) { ++counts[phi(sigma)]; });
    return counts;
}

bool is_alternating(const Permutation& sigma) {
    for (std::size_t j = 0; j + 2 < sigma.size(); ++j) {
        const bool up = sigma[j] < sigma[j + 1];
        const bool next_up = sigma[j + 1] < sigma[j + 2];
        if (up == next_up) return false;
    }
    return true;
}

BigInt beta_bruteforce(int n, int cap) {
    if (n < 0) throw std::domain_error("negative index");
    if (n <= 1) return 1;
    check_sweep_cap(n, cap);
    std::uint64_t count = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        if (sigma[0] > sigma[1] && is_alternating(sigma)) ++count;
    });
    return count;
}

BigInt entringer_bruteforce(int n, int k, int cap) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("entringer index out of range");
    if (n == 0) return 1;  // the single permutation of S_1
    check_sweep_cap(n + 1, cap);
    std::uint64_t count = 0;
    for_each_permutation(n + 1, [&](const Permutation& sigma) {
        if (sigma[0] == k + 1 && sigma[0] > sigma[1] && is_alternating(sigma)) ++count;
    });
    return count;
}

std::string permutation_to_text(const Permutation& sigma) {
    std::string out;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(sigma[i]);
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    Permutation out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i == text.size()) break;
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("unrecognized character in permutation: " + text);
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            ++i;
        }
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty permutation text");
    if (!is_permutation(out)) throw std::invalid_argument("not a permutation of 1..n: " + text);
    return out;
}

}  // namespace tforge
