#ifndef TFORGE_VERIFICATION_HPP
#define TFORGE_VERIFICATION_HPP

// Cross-method verification: the exact cyclic-min cube integral, its
// Monte Carlo estimate with a counter-based deterministic generator, and
// the aggregated self-check suite run by the CLI.

#include "tforge/numerics.hpp"
#include "tforge/paths.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tforge {

struct McEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;  // sample standard deviation / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct CheckRecord {
    std::string name;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
    double elapsed_s = 0.0;
};

struct VerifyReport {
    std::vector<CheckRecord> records;  // sorted by name
    bool all_pass() const;
};

struct VerifyOptions {
    std::optional<std::uint64_t> mc_seed;     // base of the four-seed set
    std::optional<std::uint64_t> mc_samples;  // per-seed sample count
};

// Integral over the open unit n-cube of the cyclic product
// min(x_1,x_2) min(x_2,x_3) ... min(x_n,x_1), evaluated exactly as
// one sixth of the weight sum over Motzkin paths of n-2 steps.
Rational exact_xi_integral(int n, int cap = kDefaultEnumerationCap);

// Monte Carlo estimate of the same integral. Points come from a
// counter-based generator keyed by (seed, sample index, coordinate), so
// results depend only on (n, samples, seed).
McEstimate mc_xi_integral(int n, std::uint64_t samples, std::uint64_t seed);

// Runs every module invariant at caps scaled by depth (1 fast, 2
// standard, 3 deep) and reports each as a pass/fail record; failures are
// reported, never thrown.
VerifyReport verify_suite(int depth, const VerifyOptions& options = {});

}  // namespace tforge

#endif
