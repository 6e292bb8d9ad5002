#include "doctest.h"

#include <algorithm>

#include "phinv/errors.hpp"
#include "phinv/inverse.hpp"

using namespace phinv;

TEST_CASE("inverse_totient paper examples") {
    CHECK(inverse_totient(12) == std::vector<Natural>{13, 21, 26, 28, 36, 42});
    CHECK(inverse_totient(16) == std::vector<Natural>{17, 32, 34, 40, 48, 60});
    CHECK(inverse_totient(18) == std::vector<Natural>{19, 27, 38, 54});
    CHECK(inverse_totient(14).empty());
    CHECK(inverse_totient(1) == std::vector<Natural>{1, 2});
    CHECK_THROWS_AS(inverse_totient(0), domain_error);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(1) == 2);
    CHECK(multiplicity(2) == 3);
    CHECK(multiplicity(18) == 4);
}

TEST_CASE("brute_force_inverse") {
    CHECK(brute_force_inverse(12) == std::vector<Natural>{13, 21, 26, 28, 36, 42});
    CHECK(brute_force_inverse(1) == std::vector<Natural>{1, 2});
    CHECK(brute_force_inverse(16) == std::vector<Natural>{17, 32, 34, 40, 48, 60});
    CHECK_THROWS_AS(brute_force_inverse(Natural(1) << 40), capacity_error);
}

TEST_CASE("oracle equivalence for m <= 300") {
    auto oracle = brute_force_inverse_upto(300);
    for (unsigned long m = 1; m <= 300; ++m) CHECK(inverse_totient(m) == oracle[m]);
}

TEST_CASE("odd m > 1 has no preimages") {
    for (unsigned long m = 3; m <= 1001; m += 2) CHECK(inverse_totient(m).empty());
}

TEST_CASE("doubling closure and monotone bound") {
    for (unsigned long m : {2ul, 4ul, 12ul, 16ul, 48ul, 96ul, 240ul}) {
        auto xs = inverse_totient(m);
        for (const Natural& x : xs) {
            CHECK(x > m);
            CHECK(x <= 2 * Natural(m) * m);
            if (mpz_odd_p(x.get_mpz_t())) {
                Natural doubled = 2 * x;
                CHECK(std::find(xs.begin(), xs.end(), doubled) != xs.end());
            }
        }
    }
}

TEST_CASE("find_with_multiplicity") {
    CHECK(find_with_multiplicity(3, 100) == Natural(2));
    CHECK(find_with_multiplicity(4, 100) == Natural(4));
    CHECK_FALSE(find_with_multiplicity(1, 100).has_value());
    CHECK(find_with_multiplicity(2, 100) == Natural(1));
}
