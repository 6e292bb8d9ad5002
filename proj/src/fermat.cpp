#include "phinv/fermat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "phinv/errors.hpp"

namespace phinv {

Natural fermat_number(unsigned n, unsigned max_index) {
    if (n > max_index) {
        throw capacity_error("fermat_number: index " + std::to_string(n) +
                             " above configured maximum " + std::to_string(max_index));
    }
    return pow2(1ul << n) + 1;
}

bool exponent_is_power_of_two_check(const Natural& m) {
    if (m < 1) return false;
    // m is a power of two iff it has a single set bit.
    return mpz_popcount(m.get_mpz_t()) == 1;
}

FermatPrimeTable::FermatPrimeTable(unsigned max_index) {
    entries_.reserve(max_index + 1);
    Natural product = 1;  // F_0 * ... * F_{n-1}
    for (unsigned n = 0; n <= max_index; ++n) {
        Entry e;
        e.index = n;
        e.value = pow2(1ul << n) + 1;
        if (n >= 1 && e.value != product + 2)
            throw std::logic_error("FermatPrimeTable: recursion check failed");
        if (n <= 4) {
            if (!is_prime(e.value))
                throw std::logic_error("FermatPrimeTable: F_0..F_4 must test prime");
            e.status = FermatStatus::Prime;
            e.witness = 0;
        } else if (n == 5) {
            e.status = FermatStatus::Composite;
            e.witness = 641;
            if (!mpz_divisible_p(e.value.get_mpz_t(), e.witness.get_mpz_t()))
                throw std::logic_error("FermatPrimeTable: witness 641 does not divide F_5");
        } else {
            e.status = FermatStatus::Unknown;
            e.witness = 0;
        }
        product *= e.value;
        entries_.push_back(std::move(e));
    }
}

void FermatPrimeTable::load_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open witness file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        unsigned index;
        std::string divisor_str;
        if (!(ss >> index >> divisor_str)) continue;
        Natural divisor(divisor_str);
        if (index >= entries_.size()) continue;  // beyond this table's capacity
        Entry& e = entries_[index];
        if (divisor <= 1 || divisor >= e.value ||
            !mpz_divisible_p(e.value.get_mpz_t(), divisor.get_mpz_t())) {
            throw domain_error("witness for F_" + std::to_string(index) +
                               " fails exact-division check");
        }
        if (e.status == FermatStatus::Prime)
            throw domain_error("witness contradicts Prime status of F_" + std::to_string(index));
        e.status = FermatStatus::Composite;
        e.witness = divisor;
    }
}

const FermatPrimeTable::Entry& FermatPrimeTable::entry(unsigned index) const {
    if (index >= entries_.size())
        throw capacity_error("Fermat index " + std::to_string(index) + " beyond table");
    return entries_[index];
}

unsigned FermatPrimeTable::max_settled_index() const {
    unsigned m = 0;
    for (const Entry& e : entries_) {
        if (e.status == FermatStatus::Unknown) break;
        m = e.index;
    }
    return m;
}

std::vector<Natural> FermatPrimeTable::fermat_primes_below(const Natural& bound) const {
    std::vector<Natural> out;
    for (const Entry& e : entries_) {
        if (e.value >= bound) return out;
        if (e.status == FermatStatus::Unknown) {
            throw unsettled_error("Fermat primes below bound not settled: F_" +
                                      std::to_string(e.index) + " has unknown status",
                                  max_settled_index());
        }
        if (e.status == FermatStatus::Prime) out.push_back(e.value);
    }
    // Bound reaches past the table; everything beyond is unsettled.
    throw unsettled_error("bound exceeds tabulated Fermat numbers", max_settled_index());
}

std::vector<Pow2Preimage> enumerate_pow2_preimages_detailed(unsigned e, const FermatPrimeTable& table) {
    if (e == 0) throw domain_error("enumerate_pow2_preimages: e must be >= 1");
    // Every Fermat number with value <= 2^{e+1} must have settled status.
    const Natural limit = pow2(e + 1);
    std::vector<unsigned> prime_indices;
    for (const auto& entry : table.entries()) {
        if (entry.value > limit) break;
        if (entry.status == FermatStatus::Unknown) {
            throw unsettled_error("F_" + std::to_string(entry.index) +
                                      " status unknown but within range",
                                  table.max_settled_index());
        }
        if (entry.status == FermatStatus::Prime) prime_indices.push_back(entry.index);
    }
    if (table.entries().back().value <= limit)
        throw unsettled_error("table too small for exponent", table.max_settled_index());

    // Indices with 2^i > e cannot participate (their phi contribution alone
    // exceeds 2^e).
    std::erase_if(prime_indices, [e](unsigned i) { return (1ull << i) > e; });

    std::vector<Pow2Preimage> out;
    const std::size_t subsets = 1ull << prime_indices.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        unsigned long long sum = 0;
        Natural odd_part = 1;
        std::vector<unsigned> chosen;
        for (std::size_t b = 0; b < prime_indices.size(); ++b) {
            if (mask & (1ull << b)) {
                unsigned idx = prime_indices[b];
                sum += 1ull << idx;
                odd_part *= table.entry(idx).value;
                chosen.push_back(idx);
            }
        }
        if (sum > e) continue;
        unsigned s = static_cast<unsigned>(e - sum) + 1;
        out.push_back({s, chosen, pow2(s) * odd_part});
        if (sum == e) out.push_back({0, chosen, odd_part});
    }

    const Natural target = pow2(e);
    for (const Pow2Preimage& p : out) {
        if (totient(p.value) != target)
            throw std::logic_error("enumerate_pow2_preimages: totient re-check failed");
    }
    std::sort(out.begin(), out.end(),
              [](const Pow2Preimage& a, const Pow2Preimage& b) { return a.value < b.value; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Pow2Preimage& a, const Pow2Preimage& b) {
                              return a.value == b.value;
                          }),
              out.end());
    return out;
}

std::vector<Natural> enumerate_pow2_preimages(unsigned e, const FermatPrimeTable& table) {
    std::vector<Natural> out;
    for (const Pow2Preimage& p : enumerate_pow2_preimages_detailed(e, table)) out.push_back(p.value);
    return out;
}

Natural count_pow2_preimages(unsigned e, const FermatPrimeTable& table) {
    if (e == 0) throw domain_error("count_pow2_preimages: e must be >= 1");
    // e = 2^n + a with 2^n <= e < 2^{n+1}.
    unsigned n = 0;
    while ((1ull << (n + 1)) <= e) ++n;
    const auto& fn = table.entry(n);
    if (fn.status == FermatStatus::Unknown)
        throw unsettled_error("F_" + std::to_string(n) + " status unknown", table.max_settled_index());
    if (fn.status == FermatStatus::Composite) {
        auto primes = table.fermat_primes_below(fn.value);
        return pow2(static_cast<unsigned>(primes.size()));
    }
    return Natural(static_cast<unsigned long>(enumerate_pow2_preimages(e, table).size()));
}

bool double_preserves_totient(const Natural& s) {
    if (s < 3 || mpz_even_p(s.get_mpz_t()))
        throw domain_error("double_preserves_totient: s must be odd and >= 3");
    return totient(s) == totient(2 * s);
}

}  // namespace phinv
