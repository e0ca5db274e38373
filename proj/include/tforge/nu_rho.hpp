#ifndef TFORGE_NU_RHO_HPP
#define TFORGE_NU_RHO_HPP

// Fast exact preimage counts for the neighbour-profile map (recursive,
// with the suffix shortcuts), the product weight rho, and the combined
// weight nu/rho behind the zeta path sums.

#include "tforge/numerics.hpp"
#include "tforge/paths.hpp"

#include <map>

namespace tforge {

// Memoized preimage counts keyed by the full word. Not synchronized;
// use one instance per thread, or the free nu() below.
class NuMemo {
 public:
    BigInt nu(const Path& p);

 private:
    std::map<Path, BigInt> cache_;
};

// Preimage count of an arbitrary word over {-1,0,1}: 1 for the empty
// word; words ending in +1 have none; a trailing 0 doubles the count of
// the prefix; a trailing -1 sums the counts of the prefix with one step
// decremented, flats counting twice. Positive exactly on Motzkin paths.
// Memoized per thread; observable behavior is that of a pure function.
BigInt nu(const Path& p);

// Count after appending a flat step to a path ending in k down steps:
// 2(k+1) times the base count.
BigInt nu_suffix_flat(const BigInt& nu_base, int k);

// Count after raising the final flat of a (0, -1^{k-1}) tail into a cusp
// (1, -1^k): (k+1)/2 times the flat-tail count, k >= 1. The product is
// always even on valid inputs; a remainder throws.
BigInt nu_suffix_cusp(const BigInt& nu_flat, int k);

// Product over positions j of (partial sum through j) + 2j + 3; for a
// Motzkin path of n steps the last factor is 2n + 3. Empty path gives 1.
BigInt rho(const Path& p);

// nu(p) / rho(p) as an exact rational; requires a Motzkin path.
Rational weight_f(const Path& p);

}  // namespace tforge

#endif
