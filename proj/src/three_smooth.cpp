#include "phinv/three_smooth.hpp"

#include <algorithm>

#include "phinv/core_arith.hpp"
#include "phinv/errors.hpp"
#include "phinv/inverse.hpp"

namespace phinv {
namespace {

void check_split_budget(unsigned k, unsigned n, unsigned L) {
    if (k > 64 || n > 64 || L > 8)
        throw capacity_error("split enumeration limited to sums <= 64, L <= 8");
}

// Ordered tuples of pairs (u >= 1, v >= 0) with the given remaining sums.
std::uint64_t ordered_splits_rec(unsigned k_left, unsigned n_left, unsigned L_left) {
    if (L_left == 0) return (k_left == 0 && n_left == 0) ? 1 : 0;
    if (k_left < L_left) return 0;  // each u part is at least 1
    std::uint64_t count = 0;
    for (unsigned u = 1; u + (L_left - 1) <= k_left; ++u) {
        for (unsigned v = 0; v <= n_left; ++v) {
            count += ordered_splits_rec(k_left - u, n_left - v, L_left - 1);
        }
    }
    return count;
}

// Sets of pairwise-distinct pairs, chosen in increasing lexicographic order.
std::uint64_t distinct_sets_rec(unsigned k_left, unsigned n_left, unsigned L_left,
                                unsigned min_u, unsigned min_v) {
    if (L_left == 0) return (k_left == 0 && n_left == 0) ? 1 : 0;
    std::uint64_t count = 0;
    for (unsigned u = min_u; u + (L_left - 1) <= k_left; ++u) {
        unsigned v_start = (u == min_u) ? min_v : 0;
        for (unsigned v = v_start; v <= n_left; ++v) {
            // next pair must be lexicographically greater than (u, v)
            count += distinct_sets_rec(k_left - u, n_left - v, L_left - 1, u, v + 1);
        }
    }
    return count;
}

}  // namespace

Natural ThreeSmoothTarget::value() const { return pow2(k) * natural_pow(3, n); }

std::vector<Natural> enumerate_three_smooth_preimages(unsigned k, unsigned n) {
    if (k < 1) throw domain_error("enumerate_three_smooth_preimages: k must be >= 1");
    ThreeSmoothTarget target{k, n};
    Natural m = target.value();
    if (m > Natural(kDefaultBudget)) throw capacity_error("target exceeds oracle budget");
    auto preimages = inverse_totient(m);
    for (const Natural& t : preimages) classify_preimage(t, target);
    return preimages;
}

ClassifiedPreimage classify_preimage(const Natural& t, const ThreeSmoothTarget& target) {
    if (totient(t) != target.value())
        throw domain_error("classify_preimage: totient(t) does not match target");

    ClassifiedPreimage c;
    c.value = t;
    c.two_exponent = 0;
    c.three_exponent = 0;
    for (const auto& [p, e] : factorize(t).factors) {
        if (p == 2) {
            c.two_exponent = e;
        } else if (p == 3) {
            c.three_exponent = e;
        } else {
            if (e != 1)
                throw std::logic_error("classify_preimage: extra prime with exponent > 1");
            Natural shifted = p - 1;
            unsigned u = valuation(2, shifted);
            unsigned v = valuation(3, shifted);
            if (pow2(u) * natural_pow(3, v) != shifted)
                throw std::logic_error("classify_preimage: p - 1 is not 3-smooth");
            c.extra_primes.push_back({p, u, v});
        }
    }
    c.cls = c.extra_primes.empty()          ? PreimageClass::PurePower23
            : c.extra_primes.size() == 1    ? PreimageClass::SingleExtraPrime
                                            : PreimageClass::MultiExtraPrime;

    // phi(2^x) contributes x-1 twos; phi(3^y) contributes one 2 and y-1 threes.
    unsigned two_part = (c.two_exponent >= 1 ? c.two_exponent - 1 : 0) +
                        (c.three_exponent >= 1 ? 1 : 0);
    unsigned three_part = c.three_exponent >= 1 ? c.three_exponent - 1 : 0;
    for (const ExtraPrime& ep : c.extra_primes) {
        two_part += ep.u;
        three_part += ep.v;
    }
    if (two_part != target.k || three_part != target.n)
        throw std::logic_error("classify_preimage: exponent bookkeeping mismatch");
    return c;
}

Rational paper_split_count(unsigned k, unsigned n, unsigned L, unsigned F, unsigned y) {
    (void)n;  // the formula only reads k, L, F, y
    long upper = static_cast<long>(k) + L - F - y - 1;
    if (upper < 0) return 0;
    if (L < 1) throw domain_error("paper_split_count: L must be >= 1");
    Natural binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(upper), L - 1);
    Natural fact;
    mpz_fac_ui(fact.get_mpz_t(), L);
    Rational r(binom, fact);
    r.canonicalize();
    return r;
}

std::uint64_t ordered_split_count(unsigned k, unsigned n, unsigned L) {
    check_split_budget(k, n, L);
    return ordered_splits_rec(k, n, L);
}

std::uint64_t distinct_column_split_count(unsigned k_remaining, unsigned n_remaining, unsigned L) {
    check_split_budget(k_remaining, n_remaining, L);
    if (L == 0) return (k_remaining == 0 && n_remaining == 0) ? 1 : 0;
    return distinct_sets_rec(k_remaining, n_remaining, L, 1, 0);
}

std::int64_t truncated_inclusion_exclusion_lower(unsigned k, unsigned n, unsigned L) {
    check_split_budget(k, n, L);
    std::int64_t total = static_cast<std::int64_t>(ordered_split_count(k, n, L));
    if (L < 2) return total;
    // |M_ij| is the same for every pair (i, j): fix the common column (u, v)
    // and count ordered splits of the remaining sums over L-2 positions.
    std::uint64_t coinciding = 0;
    for (unsigned u = 1; 2 * u <= k; ++u) {
        for (unsigned v = 0; 2 * v <= n; ++v) {
            coinciding += ordered_splits_rec(k - 2 * u, n - 2 * v, L - 2);
        }
    }
    std::uint64_t pairs = static_cast<std::uint64_t>(L) * (L - 1) / 2;
    return total - static_cast<std::int64_t>(pairs * coinciding);
}

UpperBoundReport upper_bound_preimages(const ThreeSmoothTarget& target) {
    if (target.k < 1) throw domain_error("upper_bound_preimages: k must be >= 1");
    const unsigned k = target.k;
    const unsigned n = target.n;
    const unsigned F = 0;
    const unsigned y0 = n >= 1 ? 1 : 0;  // minimal 3-exponent of the preimage

    UpperBoundReport report;
    report.estimate = 0;
    for (unsigned L = 1; L <= std::min(k, 6u); ++L) {
        Rational c = paper_split_count(k, n, L, F, y0);
        // Coinciding-column correction on the same column sums.
        unsigned k_cols = k > F + y0 ? k - F - y0 : 0;
        std::int64_t trunc = 0;
        if (L >= 2 && k_cols >= L) {
            std::int64_t full = static_cast<std::int64_t>(ordered_split_count(k_cols, n, L));
            trunc = full - truncated_inclusion_exclusion_lower(k_cols, n, L);
        }
        Natural fact;
        mpz_fac_ui(fact.get_mpz_t(), L);
        Rational corrected = c - Rational(Natural(static_cast<unsigned long>(trunc)), fact);
        if (corrected < 0) corrected = 0;
        unsigned x_choices = k >= L ? k - L + 1 : 0;  // admissible 2-exponents
        report.estimate += corrected * static_cast<unsigned long>(x_choices);
    }

    Natural m = target.value();
    if (m <= Natural(kDefaultBudget)) {
        report.exact = multiplicity(m);
        report.estimate_ge_exact =
            report.estimate >= Rational(static_cast<unsigned long>(*report.exact));
    }
    return report;
}

ReportRow report_row(unsigned k, unsigned n) {
    ThreeSmoothTarget target{k, n};
    ReportRow row;
    row.k = k;
    row.n = n;
    row.exact = multiplicity(target.value());
    row.paper_estimate = upper_bound_preimages(target).estimate;
    row.lower_trunc = truncated_inclusion_exclusion_lower(k, n, 2);
    return row;
}

}  // namespace phinv
