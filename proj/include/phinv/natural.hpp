#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace phinv {

// Arbitrary-precision nonnegative integer. All totient arguments and values.
using Natural = mpz_class;

inline Natural pow2(unsigned long e) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Natural natural_pow(const Natural& base, unsigned long e) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool fits_u64(const Natural& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Natural& n) {
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    if (mpz_size(n.get_mpz_t()) == 0) return 0;
    return lo;
}

inline std::string to_string(const Natural& n) { return n.get_str(10); }

}  // namespace phinv
