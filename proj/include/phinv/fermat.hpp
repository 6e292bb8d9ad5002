#pragma once

#include <string>
#include <vector>

#include "phinv/core_arith.hpp"
#include "phinv/natural.hpp"

namespace phinv {

enum class FermatStatus { Prime, Composite, Unknown };

// Known Fermat numbers F_n = 2^(2^n)+1 with settled primality status.
// Indices 0..4 are prime, 5 is composite (witness 641, re-verified at
// construction). Further compositeness witnesses can be loaded from a
// plain-text file of "index divisor" lines; each is re-verified by
// exact division.
class FermatPrimeTable {
public:
    struct Entry {
        unsigned index;
        Natural value;
        FermatStatus status;
        Natural witness;  // nonzero for Composite entries with a stored divisor
    };

    explicit FermatPrimeTable(unsigned max_index = 20);

    void load_witness_file(const std::string& path);

    const Entry& entry(unsigned index) const;
    unsigned max_index() const { return static_cast<unsigned>(entries_.size() - 1); }
    unsigned max_settled_index() const;
    const std::vector<Entry>& entries() const { return entries_; }

    // All Fermat primes strictly below bound, ascending. Errors with
    // unsettled_error if bound reaches past settled knowledge.
    std::vector<Natural> fermat_primes_below(const Natural& bound) const;

private:
    std::vector<Entry> entries_;
};

// 2^(2^n)+1. Capacity error above max_index.
Natural fermat_number(unsigned n, unsigned max_index = 20);

// True iff m is a power of two. Used to prune 2^m+1 prime candidates:
// if 2^m+1 is prime then m must be a power of two.
bool exponent_is_power_of_two_check(const Natural& m);

// One preimage of a power of two: 2^s times a product of distinct
// Fermat primes picked by index.
struct Pow2Preimage {
    unsigned two_exponent;
    std::vector<unsigned> fermat_indices;
    Natural value;
};

// Exactly the x with phi(x) = 2^e, sorted ascending. Every element is
// re-verified by totient.
std::vector<Natural> enumerate_pow2_preimages(unsigned e, const FermatPrimeTable& table);
std::vector<Pow2Preimage> enumerate_pow2_preimages_detailed(unsigned e, const FermatPrimeTable& table);

// |phi^-1(2^e)|. Uses the 2^t count when F_n is composite and the
// exponent sits in the proven window, otherwise counts the enumeration.
Natural count_pow2_preimages(unsigned e, const FermatPrimeTable& table);

// phi(s) == phi(2s) for odd s.
bool double_preserves_totient(const Natural& s);

}  // namespace phinv
