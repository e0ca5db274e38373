#include "tforge/nu_rho.hpp"

#include <stdexcept>

namespace tforge {

BigInt NuMemo::nu(const Path& p) {
    if (p.empty()) return 1;
    if (auto it = cache_.find(p); it != cache_.end()) return it->second;

    BigInt result = 0;
    const Step last = p.back();
    Path prefix(p.begin(), p.end() - 1);
    if (last == 0) {
        result = 2 * nu(prefix);
    } else if (last == -1) {
        // decrement one step of the prefix; only flats and ups contribute
        for (std::size_t j = 0; j < prefix.size(); ++j) {
            if (prefix[j] == 0) {
                Path q = prefix;
                q[j] = -1;
                result += 2 * nu(q);
            } else if (prefix[j] == 1) {
                Path q = prefix;
                q[j] = 0;
                result += nu(q);
            }
        }
    }
    // words ending in +1 keep result = 0: no Motzkin path ends with an up step
    cache_.emplace(p, result);
    return result;
}

BigInt nu(const Path& p) {
    thread_local NuMemo memo;
    return memo.nu(p);
}

BigInt nu_suffix_flat(const BigInt& nu_base, int k) {
    if (k < 0) throw std::domain_error("negative down-run length");
    return 2 * (k + 1) * nu_base;
}

BigInt nu_suffix_cusp(const BigInt& nu_flat, int k) {
    if (k < 1) throw std::domain_error("cusp tail needs k >= 1");
    const BigInt product = (k + 1) * nu_flat;
    if (product % 2 != 0) throw std::domain_error("cusp count not divisible by 2");
    return product / 2;
}

BigInt rho(const Path& p) {
    BigInt result = 1;
    int partial = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        partial += p[j];
        result *= partial + 2 * static_cast<int>(j + 1) + 3;
    }
    return result;
}

Rational weight_f(const Path& p) {
    if (!is_motzkin(p)) throw std::domain_error("weight requires a Motzkin path");
    return rational_make(nu(p), rho(p));
}

}  // namespace tforge
