#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "phinv/natural.hpp"

namespace phinv {

// Canonical decomposition: (prime, exponent) pairs, strictly increasing by prime.
// The factorization of 1 is the empty sequence.
struct Factorization {
    std::vector<std::pair<Natural, unsigned>> factors;

    Natural reconstruct() const;
};

// Deterministic for n < 2^64 (fixed Miller-Rabin witness set). Above that,
// BPSW plus extra rounds; use primality_is_certain to tell the two apart.
bool is_prime(const Natural& n);

// True when the is_prime verdict for n is deterministic, false when it rests
// on repeated probabilistic rounds.
bool primality_is_certain(const Natural& n);

Factorization factorize(const Natural& n);

Natural totient(const Natural& n);
Natural totient(const Factorization& f);

// Largest e with p^e | n.
unsigned valuation(const Natural& p, const Natural& n);

// Phi for every x in [0, limit] by linear sieve; index 0 holds 0.
// limit must fit 32 bits.
std::vector<std::uint32_t> totient_sieve(std::uint64_t limit);

}  // namespace phinv
