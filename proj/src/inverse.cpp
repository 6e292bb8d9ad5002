#include "phinv/inverse.hpp"

#include <algorithm>
#include <limits>

#include "phinv/core_arith.hpp"
#include "phinv/errors.hpp"

namespace phinv {
namespace {

std::vector<Natural> divisors_of(const Natural& m) {
    Factorization f = factorize(m);
    std::vector<Natural> divs{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t base = divs.size();
        Natural pk = 1;
        for (unsigned j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

struct Enumerator {
    std::vector<Natural> primes;  // candidate primes p with (p-1) | m
    std::vector<Natural> found;
    std::size_t cap = std::numeric_limits<std::size_t>::max();

    // Appends x = prefix * (products over primes[idx..]) with phi matching rem.
    void solve(const Natural& rem, std::size_t idx, const Natural& prefix) {
        if (found.size() > cap) return;
        // rem == 1 is a hit, but the loop must still run: p = 2 has
        // phi-cost 1 and can extend the product (phi(x) = phi(2x) for odd x).
        if (rem == 1) found.push_back(prefix);
        for (std::size_t j = idx; j < primes.size(); ++j) {
            const Natural& p = primes[j];
            Natural cost = p - 1;
            Natural pw = p;
            if (cost == 0 || !mpz_divisible_p(rem.get_mpz_t(), cost.get_mpz_t())) continue;
            while (mpz_divisible_p(rem.get_mpz_t(), cost.get_mpz_t())) {
                solve(rem / cost, j + 1, prefix * pw);
                if (found.size() > cap) return;
                cost *= p;
                pw *= p;
            }
        }
    }
};

std::vector<Natural> enumerate_preimages(const Natural& m, std::size_t cap) {
    if (m <= 0) throw domain_error("inverse_totient: m must be >= 1");
    Enumerator en;
    en.cap = cap;
    for (const Natural& d : divisors_of(m)) {
        Natural p = d + 1;
        if (is_prime(p)) en.primes.push_back(p);
    }
    // Largest primes first keeps the recursion shallow.
    std::sort(en.primes.rbegin(), en.primes.rend());
    en.solve(m, 0, 1);
    std::sort(en.found.begin(), en.found.end());
    en.found.erase(std::unique(en.found.begin(), en.found.end()), en.found.end());
    return en.found;
}

}  // namespace

std::vector<Natural> inverse_totient(const Natural& m) {
    auto result = enumerate_preimages(m, std::numeric_limits<std::size_t>::max());
    for (const Natural& x : result) {
        if (totient(x) != m) throw std::logic_error("inverse_totient: totient re-check failed");
    }
    return result;
}

std::size_t multiplicity(const Natural& m) { return inverse_totient(m).size(); }

std::vector<Natural> brute_force_inverse(const Natural& m, std::uint64_t budget) {
    if (m <= 0) throw domain_error("brute_force_inverse: m must be >= 1");
    Natural limit = 2 * m * m;
    if (limit > budget) {
        throw capacity_error("brute_force_inverse: scan bound 2m^2 = " + to_string(limit) +
                             " exceeds budget " + std::to_string(budget));
    }
    std::uint64_t lim = mpz_get_ui(limit.get_mpz_t());
    std::uint64_t target = mpz_get_ui(m.get_mpz_t());
    auto phi = totient_sieve(lim);
    std::vector<Natural> out;
    for (std::uint64_t x = 1; x <= lim; ++x) {
        if (phi[x] == target) out.emplace_back(static_cast<unsigned long>(x));
    }
    return out;
}

std::vector<std::vector<Natural>> brute_force_inverse_upto(std::uint64_t m_max, std::uint64_t budget) {
    if (m_max == 0) throw domain_error("brute_force_inverse_upto: m_max must be >= 1");
    std::uint64_t lim = 2 * m_max * m_max;
    if (lim > budget) throw capacity_error("brute_force_inverse_upto: scan bound exceeds budget");
    auto phi = totient_sieve(lim);
    std::vector<std::vector<Natural>> out(m_max + 1);
    for (std::uint64_t x = 1; x <= lim; ++x) {
        if (phi[x] <= m_max) out[phi[x]].emplace_back(static_cast<unsigned long>(x));
    }
    return out;
}

std::optional<Natural> find_with_multiplicity(std::size_t k, const Natural& limit) {
    if (limit < 1) throw domain_error("find_with_multiplicity: limit must be >= 1");
    for (Natural m = 1; m <= limit; ++m) {
        // Stop enumerating per-m as soon as the count exceeds k.
        auto found = enumerate_preimages(m, k);
        if (found.size() == k) return m;
    }
    return std::nullopt;
}

}  // namespace phinv
