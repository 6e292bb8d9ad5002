#include "phinv/core_arith.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "phinv/errors.hpp"

namespace phinv {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all n < 2^64 with this witness set.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 pollard_rho(u64 n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        u64 c = rng() % (n - 1) + 1;
        u64 x = rng() % n, y = x, d = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        // Brent cycle detection with batched gcd.
        u64 ys = y, q = 1;
        u64 r = 1;
        const u64 batch = 128;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            do {
                ys = step(ys);
                u64 diff = x > ys ? x - ys : ys - x;
                d = std::gcd(diff, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(u64 n, std::vector<u64>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n, rng);
    factor_u64_into(d, out, rng);
    factor_u64_into(n / d, out, rng);
}

void factor_mpz_into(const Natural& n, std::vector<Natural>& out, gmp_randclass& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    // Pollard rho on mpz for oversized composites.
    while (true) {
        Natural c = rng.get_z_range(n - 1) + 1;
        Natural x = rng.get_z_range(n), y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Natural diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) {
            factor_mpz_into(d, out, rng);
            factor_mpz_into(n / d, out, rng);
            return;
        }
    }
}

}  // namespace

Natural Factorization::reconstruct() const {
    Natural r = 1;
    for (const auto& [p, e] : factors) r *= natural_pow(p, e);
    return r;
}

bool is_prime(const Natural& n) {
    if (n < 0) throw domain_error("is_prime: n must be nonnegative");
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    // 64 BPSW/Miller-Rabin rounds; callers can check primality_is_certain.
    return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

bool primality_is_certain(const Natural& n) {
    if (fits_u64(n)) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 64) == 2;
}

Factorization factorize(const Natural& n) {
    if (n <= 0) throw domain_error("factorize: n must be >= 1");
    Factorization result;
    if (n == 1) return result;

    if (fits_u64(n)) {
        static thread_local std::mt19937_64 rng64(0x2545f4914f6cdd1dull);
        std::vector<u64> ps;
        u64 v = to_u64(n);
        for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
            while (v % p == 0) {
                ps.push_back(p);
                v /= p;
            }
        }
        factor_u64_into(v, ps, rng64);
        std::sort(ps.begin(), ps.end());
        for (std::size_t i = 0; i < ps.size();) {
            std::size_t j = i;
            while (j < ps.size() && ps[j] == ps[i]) ++j;
            result.factors.emplace_back(Natural(static_cast<unsigned long>(ps[i])),
                                        static_cast<unsigned>(j - i));
            i = j;
        }
        if (result.reconstruct() != n) throw std::logic_error("factorize: reconstruction mismatch");
        return result;
    }

    Natural rest = n;
    // Trial division by small primes first.
    for (u64 p = 2; p <= 100000 && rest > 1; p = (p == 2 ? 3 : p + 2)) {
        if (Natural(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                rest /= p;
                ++e;
            }
            result.factors.emplace_back(Natural(p), e);
        }
    }

    if (rest > 1) {
        std::vector<Natural> primes;
        if (fits_u64(rest)) {
            static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
            std::vector<u64> ps;
            factor_u64_into(to_u64(rest), ps, rng);
            for (u64 p : ps) primes.emplace_back(static_cast<unsigned long>(p));
        } else {
            static thread_local gmp_randclass rng(gmp_randinit_default);
            factor_mpz_into(rest, primes, rng);
        }
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            result.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }

    // Re-verify: each factor prime, product reconstructs n.
    Natural check = 1;
    for (const auto& [p, e] : result.factors) {
        if (!is_prime(p)) throw std::logic_error("factorize: non-prime factor produced");
        check *= natural_pow(p, e);
    }
    if (check != n) throw std::logic_error("factorize: reconstruction mismatch");
    return result;
}

Natural totient(const Factorization& f) {
    Natural r = 1;
    for (const auto& [p, e] : f.factors) r *= natural_pow(p, e - 1) * (p - 1);
    return r;
}

Natural totient(const Natural& n) {
    if (n <= 0) throw domain_error("totient: n must be >= 1");
    return totient(factorize(n));
}

unsigned valuation(const Natural& p, const Natural& n) {
    if (n == 0) throw domain_error("valuation: n must be >= 1");
    if (!is_prime(p)) throw domain_error("valuation: p must be prime");
    Natural rest = n;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++e;
    }
    return e;
}

std::vector<std::uint32_t> totient_sieve(std::uint64_t limit) {
    if (limit >= (1ull << 32)) throw capacity_error("totient_sieve: limit must fit 32 bits");
    std::vector<std::uint32_t> phi(limit + 1);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    phi[0] = 0;
    if (limit >= 1) phi[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            phi[i] = i - 1;
        }
        for (std::uint32_t p : primes) {
            if (i * p > limit) break;
            composite[i * p] = true;
            if (i % p == 0) {
                phi[i * p] = phi[i] * static_cast<std::uint64_t>(p);
                break;
            }
            phi[i * p] = phi[i] * static_cast<std::uint64_t>(p - 1);
        }
    }
    return phi;
}

}  // namespace phinv
