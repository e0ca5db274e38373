#ifndef TFORGE_PATHS_HPP
#define TFORGE_PATHS_HPP

// Motzkin and Dyck lattice paths: predicates, exhaustive enumeration,
// suffix classification, and the closed-form counting functions.

#include "tforge/numerics.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tforge {

using Step = std::int8_t;  // -1 down, 0 flat, +1 up
using Path = std::vector<Step>;

// Largest n accepted by the exhaustive enumerators unless overridden.
inline constexpr int kDefaultEnumerationCap = 16;

// Total sum zero with every prefix sum non-negative; the empty path counts.
bool is_motzkin(const Path& p);

// Number of flat (0) steps.
int count_zeros(const Path& p);

// All Motzkin paths of exactly n steps, lexicographic with -1 < 0 < 1.
std::vector<Path> enumerate_motzkin(int n, int cap = kDefaultEnumerationCap);

// All flat-free Motzkin paths of n steps (n must be even).
std::vector<Path> enumerate_dyck(int n, int cap = kDefaultEnumerationCap);

// Every nonempty Motzkin path ends either in (0, -1^run) or (1, -1^run);
// the two kinds are mutually exclusive and exhaustive.
enum class TailKind { Flat, Cusp };

struct SuffixClass {
    TailKind kind;
    int run;  // trailing -1 count: Flat allows run >= 0, Cusp requires run >= 1
    friend bool operator==(const SuffixClass&, const SuffixClass&) = default;
};

SuffixClass suffix_class(const Path& p);

// Counts of the n+1 suffix classes of (n+1)-step Motzkin paths, ordered
// Flat(0), Cusp(1), Flat(1), Cusp(2), Flat(2), ...; the entries sum to
// the (n+1)-st Motzkin number.
std::vector<BigInt> suffix_counts(int n, int cap = kDefaultEnumerationCap);

BigInt motzkin_number(int n);
BigInt catalan_number(int n);

// Motzkin paths of n steps with exactly k flat steps: zero when n and k
// have different parity, otherwise binomial(n,k) * catalan((n-k)/2).
BigInt d_count(int n, int k);

// Path edits used by the closure properties; both return new values.
Path insert_flat(const Path& p, std::size_t pos);
Path flatten_cusp(const Path& p, std::size_t pos);  // (1,-1) at pos,pos+1 -> 0

std::string path_to_text(const Path& p);  // "(1,0,-1)"; empty path is "()"

// Accepts "(1,0,-1)", a bare comma list "1,0,-1", or glyphs "UFD"/"U F D"
// with U/F/D mapping to +1/0/-1.
Path parse_path(const std::string& text);

}  // namespace tforge

#endif
