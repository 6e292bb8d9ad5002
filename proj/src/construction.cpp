#include "phinv/construction.hpp"

#include <algorithm>

#include "phinv/core_arith.hpp"
#include "phinv/errors.hpp"
#include "phinv/inverse.hpp"

namespace phinv {

std::vector<Natural> prime_window(unsigned n) {
    std::vector<Natural> primes;
    Natural p = 2;
    while (primes.size() < n + 1u) {
        primes.push_back(p);
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return primes;
}

Natural q_value(unsigned n) {
    Natural q = 1;
    for (const Natural& p : prime_window(n)) q *= p - 1;
    return q;
}

std::vector<ConstructedPreimage> construct_preimages_detailed(unsigned n) {
    if (n < 1) throw domain_error("construct_preimages: n must be >= 1");
    if (n > 24) throw capacity_error("construct_preimages: subset enumeration too large for n > 24");
    const auto primes = prime_window(n);
    const Natural target = q_value(n);

    std::vector<ConstructedPreimage> out;
    const std::uint64_t subsets = 1ull << (n + 1);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        ConstructedPreimage c;
        c.value = 1;
        for (unsigned k = 0; k <= n; ++k) {
            if (mask & (1ull << k)) {
                c.substituted.push_back(k);
                c.value *= primes[k] - 1;
            } else {
                c.value *= primes[k];
            }
        }
        c.admissible = c.value >= 1 && totient(c.value) == target;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Natural> construct_preimages(unsigned n) {
    std::vector<Natural> values;
    for (const auto& c : construct_preimages_detailed(n)) {
        if (c.admissible) values.push_back(c.value);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

bool single_substitution_identity_check(unsigned n, unsigned k) {
    if (k > n) throw domain_error("single_substitution_identity_check: k must be <= n");
    const auto primes = prime_window(n);
    Natural x = 1;
    for (unsigned i = 0; i <= n; ++i) x *= (i == k) ? primes[i] - 1 : primes[i];
    return totient(x) == q_value(n);
}

LowerBoundResult lower_bound_check(unsigned n) {
    LowerBoundResult r;
    r.constructed = construct_preimages(n).size();
    const Natural q = q_value(n);
    // Exact multiplicity when the target is small enough to invert quickly.
    if (q <= 1'000'000) r.exact = multiplicity(q);
    return r;
}

}  // namespace phinv
