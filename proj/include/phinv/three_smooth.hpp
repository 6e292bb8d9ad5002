#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phinv/natural.hpp"

namespace phinv {

using Rational = mpq_class;

// m = 2^k * 3^n, k >= 1.
struct ThreeSmoothTarget {
    unsigned k;
    unsigned n;
    Natural value() const;
};

enum class PreimageClass { PurePower23, SingleExtraPrime, MultiExtraPrime };

struct ExtraPrime {
    Natural p;
    unsigned u;  // eta_2(p - 1)
    unsigned v;  // eta_3(p - 1)
};

struct ClassifiedPreimage {
    Natural value;
    PreimageClass cls;
    unsigned two_exponent;    // exponent of 2 in value
    unsigned three_exponent;  // exponent of 3 in value
    std::vector<ExtraPrime> extra_primes;
};

// phi^-1(2^k 3^n), every element classified along the way.
std::vector<Natural> enumerate_three_smooth_preimages(unsigned k, unsigned n);

// Splits t into 2^x 3^y times distinct primes with 3-smooth p-1; checks
// the exponent bookkeeping against the target.
ClassifiedPreimage classify_preimage(const Natural& t, const ThreeSmoothTarget& target);

// C(k+L-F-y-1, L-1) / L! as an exact rational. A labeled estimate; it can
// be non-integral.
Rational paper_split_count(unsigned k, unsigned n, unsigned L, unsigned F, unsigned y);

// Number of L-element sets of pairwise-distinct pairs (u >= 1, v >= 0)
// with sum of u = k_remaining, sum of v = n_remaining. Exhaustive.
std::uint64_t distinct_column_split_count(unsigned k_remaining, unsigned n_remaining, unsigned L);

// Ordered-split count |U| minus the pairwise coinciding-column counts,
// both by enumeration. Can go negative by truncation.
std::int64_t truncated_inclusion_exclusion_lower(unsigned k, unsigned n, unsigned L);

// Ordered L-tuples of pairs (u >= 1, v >= 0) with the given sums.
std::uint64_t ordered_split_count(unsigned k, unsigned n, unsigned L);

struct UpperBoundReport {
    Rational estimate;                 // the counting-formula value, summed over feasible L
    std::optional<std::size_t> exact;  // multiplicity by full inversion, when feasible
    std::optional<bool> estimate_ge_exact;
};

// The counting-formula estimate next to the exact multiplicity. The
// estimate sums, over feasible L, the binomial split count (F = 0,
// minimal 3-exponent) corrected by the coinciding-column count and
// scaled by the number of admissible 2-exponents.
UpperBoundReport upper_bound_preimages(const ThreeSmoothTarget& target);

struct ReportRow {
    unsigned k;
    unsigned n;
    std::size_t exact;
    Rational paper_estimate;
    std::int64_t lower_trunc;
};

// One row per (k, n) target: exact count, formula estimate, truncated
// lower value at L = 2.
ReportRow report_row(unsigned k, unsigned n);

}  // namespace phinv
