#pragma once

#include <optional>
#include <vector>

#include "phinv/natural.hpp"

namespace phinv {

// The first n+1 primes p_0 = 2, p_1 = 3, ..., p_n.
std::vector<Natural> prime_window(unsigned n);

// Q_n = (p_0 - 1)(p_1 - 1)...(p_n - 1), the totient of the primorial.
Natural q_value(unsigned n);

struct ConstructedPreimage {
    std::vector<unsigned> substituted;  // indices k where p_k was replaced by p_k - 1
    Natural value;
    bool admissible;  // phi(value) == Q_n, decided by exact evaluation
};

// All 2^{n+1} substitution subsets; admissible values only, deduplicated
// and sorted. Guaranteed to contain at least n+2 elements.
std::vector<Natural> construct_preimages(unsigned n);
std::vector<ConstructedPreimage> construct_preimages_detailed(unsigned n);

// phi(p_0...p_{k-1} (p_k - 1) p_{k+1}...p_n) == Q_n, evaluated exactly.
bool single_substitution_identity_check(unsigned n, unsigned k);

struct LowerBoundResult {
    std::size_t constructed;
    std::optional<std::size_t> exact;  // multiplicity(Q_n) when the oracle is feasible
};

LowerBoundResult lower_bound_check(unsigned n);

}  // namespace phinv
