#include <doctest.h>

#include <stdexcept>

#include "rta/bigint.hpp"

using rta::BigUint;

TEST_CASE("zero and small values") {
    BigUint z;
    CHECK(z.is_zero());
    CHECK(z.to_decimal() == "0");
    CHECK(z.as_u64() == 0);
    CHECK(BigUint(42).to_decimal() == "42");
    CHECK(BigUint(18446744073709551615ull).to_decimal() == "18446744073709551615");
}

TEST_CASE("addition carries across limbs") {
    BigUint a(18446744073709551615ull);  // 2^64 - 1
    a += BigUint(1);
    CHECK(a.to_decimal() == "18446744073709551616");
    CHECK(a.limb_count() == 2);
    a += a;
    CHECK(a.to_decimal() == "36893488147419103232");
}

TEST_CASE("multiplication matches known big products") {
    const BigUint a(18446744073709551615ull);
    const BigUint sq = a * a;
    // (2^64 - 1)^2 = 2^128 - 2^65 + 1
    CHECK(sq.to_decimal() == "340282366920938463426481119284349108225");
    CHECK((sq * BigUint(0)).is_zero());
    CHECK((BigUint(0) * sq).is_zero());

    // Multi-limb squaring, value fixed by an independent computation.
    const BigUint q = sq * sq;
    CHECK(q.to_decimal() ==
          "115792089237316195398462578067141184799968521174335529155754622898352762650625");
}

TEST_CASE("add_product accumulates like mul plus add") {
    BigUint acc(7);
    acc.add_product(BigUint(1000000007), BigUint(998244353));
    BigUint expect = BigUint(7) + BigUint(1000000007) * BigUint(998244353);
    CHECK(acc == expect);
    CHECK(acc.to_decimal() == "998244359987710478");
}

TEST_CASE("ordering") {
    CHECK(BigUint(3) < BigUint(5));
    CHECK(BigUint(5) > BigUint(3));
    BigUint big = BigUint(1);
    for (int i = 0; i < 5; ++i) big = big * BigUint(1000000000000000000ull);
    CHECK(BigUint(999) < big);
    CHECK(big == big);
}

TEST_CASE("scientific rounding, half-up with carry") {
    CHECK(BigUint(1193600).to_scientific(3) == "1.19e+06");
    CHECK(BigUint(22656).to_scientific(3) == "2.27e+04");
    CHECK(BigUint(204184).to_scientific(3) == "2.04e+05");
    CHECK(BigUint(59150048).to_scientific(3) == "5.92e+07");
    CHECK(BigUint(999).to_scientific(2) == "1.0e+03");
    CHECK(BigUint(95).to_scientific(1) == "1e+02");
    CHECK(BigUint(94).to_scientific(1) == "9e+01");
    CHECK(BigUint(18).to_scientific(3) == "1.80e+01");
    CHECK(BigUint(0).to_scientific(3) == "0");
    CHECK_THROWS_AS(BigUint(5).to_scientific(0), std::invalid_argument);
}

TEST_CASE("as_double approximation") {
    CHECK(BigUint(123456).as_double() == doctest::Approx(123456.0));
    BigUint big = BigUint(1000000000000ull);
    big = big * big * big;  // 1e36
    CHECK(big.as_double() == doctest::Approx(1e36).epsilon(1e-9));
}
