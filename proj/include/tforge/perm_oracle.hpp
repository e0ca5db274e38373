#ifndef TFORGE_PERM_ORACLE_HPP
#define TFORGE_PERM_ORACLE_HPP

// Brute-force ground truth over symmetric groups: the neighbour-profile
// map phi, its preimage counts, alternating permutations, zig-zag numbers
// and Entringer counts, all by exhaustive sweeps.

#include "tforge/numerics.hpp"
#include "tforge/paths.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tforge {

using Permutation = std::vector<int>;  // images sigma(1..n), a bijection of 1..n

// Largest S_n swept by default; 9! = 362,880 keeps sweeps under a second.
inline constexpr int kDefaultBruteForceCap = 9;

bool is_permutation(const Permutation& sigma);

// For sigma in S_{n+1}, the length-n word whose j-th step is one less
// than the number of neighbours of the value j exceeding j in the list
// 0, sigma(1), ..., sigma(n+1), 0. Requires size >= 2.
Path phi(const Permutation& sigma);

// Number of permutations of S_{n+1} mapping to p under phi. The empty
// path counts the single permutation of S_1 (empty neighbour profile).
BigInt nu_bruteforce(const Path& p, int cap = kDefaultBruteForceCap);

// One sweep of S_{n+1} tallying phi preimage counts for every word of
// length n; words that never occur are absent from the map.
std::map<Path, std::uint64_t> phi_census(int n, int cap = kDefaultBruteForceCap);

// Strict comparisons alternate along sigma(1..n); sizes 1 and 2 qualify.
bool is_alternating(const Permutation& sigma);

// Zig-zag number: alternating permutations of S_n starting with a
// descent, with the conventional values 1 at n = 0 and 1.
BigInt beta_bruteforce(int n, int cap = kDefaultBruteForceCap);

// Alternating permutations of S_{n+1} with sigma(1) = k+1 > sigma(2).
BigInt entringer_bruteforce(int n, int k, int cap = kDefaultBruteForceCap);

std::string permutation_to_text(const Permutation& sigma);
Permutation parse_permutation(const std::string& text);

}  // namespace tforge

#endif
