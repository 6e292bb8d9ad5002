#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phinv/natural.hpp"

namespace phinv {

// Default cap on oracle work, in totient evaluations.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// The complete set {x : phi(x) = m}, sorted ascending. Candidates are
// assembled recursively from prime powers p^j with p-1 dividing the
// remaining target; every result is re-verified with totient.
std::vector<Natural> inverse_totient(const Natural& m);

// |inverse_totient(m)|.
std::size_t multiplicity(const Natural& m);

// Independent oracle: scans all x <= 2m^2 with a totient sieve.
// phi(x) >= sqrt(x/2), so phi(x) = m forces x <= 2m^2.
std::vector<Natural> brute_force_inverse(const Natural& m, std::uint64_t budget = kDefaultBudget);

// Oracle sweep: preimage sets for every m in [1, m_max] from one sieve pass.
std::vector<std::vector<Natural>> brute_force_inverse_upto(std::uint64_t m_max,
                                                           std::uint64_t budget = kDefaultBudget);

// Smallest m <= limit with multiplicity(m) = k, if any.
std::optional<Natural> find_with_multiplicity(std::size_t k, const Natural& limit);

}  // namespace phinv
