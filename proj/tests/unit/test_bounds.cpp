#include "asa/bounds.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace asa;

TEST_CASE("gamma and lambda exact values") {
    CHECK(asa::gamma(1) == 2);
    CHECK(asa::gamma(2) == 48);
    CHECK(asa::gamma(3) == 11232);
    CHECK(lambda(1) == 1);
    CHECK(lambda(2) == 94);
    CHECK(lambda(3) == 33693);
    CHECK_THROWS_AS(asa::gamma(0), std::invalid_argument);
    CHECK_THROWS_AS(lambda(0), std::invalid_argument);
}

TEST_CASE("gamma counts invertible matrices over F_3") {
    for (unsigned d = 1; d <= 3; ++d)
        CHECK(asa::gamma(d) == oracle::count_gl_f3(d));
}

TEST_CASE("gamma divisibility chain") {
    for (unsigned d1 = 1; d1 <= 6; ++d1)
        for (unsigned d2 = d1; d2 <= 6; ++d2)
            CHECK(asa::gamma(d2) % asa::gamma(d1) == 0);
}

TEST_CASE("psi exact values") {
    CHECK(psi(1).integer() == 2);
    const BigInt p2 = psi(2).integer();
    CHECK(p2 == oracle::square_and_multiply(48, 94));
    // Digit count from an independent floating-point logarithm: 94 log10(48) = 158.04...
    const double log10_value = 94.0 * std::log10(48.0);
    CHECK(decimal_digits(p2) == static_cast<std::size_t>(std::floor(log10_value)) + 1);
    CHECK(decimal_digits(p2) == 159);
    // psi(1) | psi(2): the only materializable instance of super-increase.
    CHECK(p2 % psi(1).integer() == 0);
    CHECK_THROWS_AS(psi(0), std::invalid_argument);
}

TEST_CASE("psi(3) materializes under the default cap") {
    const auto r = psi(3);
    REQUIRE(r.materialized());
    const double digits = 33693.0 * std::log10(11232.0);
    CHECK(decimal_digits(r.integer()) == static_cast<std::size_t>(std::floor(digits)) + 1);
}

TEST_CASE("psi beyond the cap returns a size report") {
    const auto r = psi(4);
    REQUIRE_FALSE(r.materialized());
    const auto& s = std::get<SizeReport>(r.value);
    REQUIRE(s.digit_count.has_value());
    // lambda(4) log10(gamma(4)) computed here in long double.
    const long double g4 = 24261120.0L;
    const long double expected = (4.0L * (g4 - 1.0L)) * std::log10(g4);
    CHECK(std::abs(std::stold(s.log10_value) - expected) / expected < 1e-9L);
    CHECK(*s.digit_count == static_cast<unsigned long long>(std::floor(expected)) + 1);
    CHECK_THROWS_AS(r.integer(), DigitCapExceeded);

    BoundsConfig tiny;
    tiny.digit_cap = 100;
    CHECK_FALSE(psi(2, tiny).materialized());
    CHECK(*std::get<SizeReport>(psi(2, tiny).value).digit_count == 159);
}

TEST_CASE("c_tilde family") {
    CHECK(c_tilde(1, 1).integer() == 2);
    CHECK(c_tilde(1, 2).integer() == 4);
    for (int n = 1; n <= 10; ++n)
        CHECK(c_tilde(1, n).integer() == 2 * n);
    const auto big = c_tilde(2, 1);
    REQUIRE_FALSE(big.materialized());
    // psi(94) = gamma(94)^(94 (gamma(94) - 1)), so log10 log10 psi(94) is
    // log10(94) + log10(gamma(94)) + log10(log10(gamma(94))) up to 10^-4000.
    double lg94 = 94.0 * 94.0 * std::log10(3.0);
    for (int j = 1; j <= 94; ++j)
        lg94 += std::log10(1.0 - std::pow(3.0, -j));
    const double loglog = std::log10(94.0) + lg94 + std::log10(lg94);
    CHECK(std::abs(std::stod(std::get<SizeReport>(big.value).log10_log10_value) - loglog) < 1e-3);

    CHECK(c_tilde_improved(1, 1).integer() == 2);
    CHECK(c_tilde_improved(1, 3).integer() == 6);
    // 48^(94 * 47) has about 7.4k digits, so it fits under the default cap.
    const auto improved = c_tilde_improved(2, 1);
    REQUIRE(improved.materialized());
    CHECK(improved.integer() == oracle::square_and_multiply(48, 94 * 47));
    const double digits = 94.0 * 47.0 * std::log10(48.0);
    CHECK(decimal_digits(improved.integer()) == static_cast<std::size_t>(std::floor(digits)) + 1);
    BoundsConfig small;
    small.digit_cap = 1000;
    const auto refused = c_tilde_improved(2, 1, small);
    REQUIRE_FALSE(refused.materialized());
    const auto& s = std::get<SizeReport>(refused.value);
    REQUIRE(s.digit_count.has_value());
    CHECK(*s.digit_count == static_cast<unsigned long long>(std::floor(digits)) + 1);

    CHECK(c_reductive(1, 1, 0).integer() == 2);
    CHECK(c_reductive(1, 2, 1).integer() == 8);
    CHECK(c_reductive(1, 1, 2).integer() == 8);
}

TEST_CASE("index bounds") {
    CHECK(dirichlet_index_bound(1, 1) == 1);
    CHECK(dirichlet_index_bound(2, Rational(1, 4)) == 2);
    CHECK(galois_index_bound(2, 1) == 2);
    CHECK(spl0_index_bound(1) == 1);
    CHECK(spl0_index_bound(Rational(1, 6)) == 6);
    CHECK(spl0_index_bound(Rational(1, 2)) == 2);
    CHECK_THROWS_AS(spl0_index_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(spl0_index_bound(Rational(3, 2)), std::invalid_argument);

    CHECK(t1_density_bound(1, 1).integer() == 2);
    CHECK(t1_density_bound(1, Rational(1, 2)).integer() == 4);
    CHECK_FALSE(t1_density_bound(2, Rational(1, 2)).materialized());
}

TEST_CASE("divides_psi agrees with materialized psi") {
    const BigInt p1 = psi(1).integer(), p2 = psi(2).integer();
    for (int n = 1; n <= 300; ++n) {
        CHECK(divides_psi(1, n) == (p1 % n == 0));
        CHECK(divides_psi(2, n) == (p2 % n == 0));
    }
    CHECK(divides_psi(2, oracle::square_and_multiply(2, 376)));  // 48^94 = 2^376 3^94
    CHECK_FALSE(divides_psi(2, oracle::square_and_multiply(2, 377)));
    CHECK(divides_psi(5, 13 * 11 * 11 * 5));
    CHECK_FALSE(divides_psi(5, 7));  // 7 divides no factor 3^5 - 3^i
}

TEST_CASE("digit cap from the environment") {
    ::setenv("ASA_DIGIT_CAP", "50", 1);
    CHECK(BoundsConfig::from_environment().digit_cap == 50);
    ::setenv("ASA_DIGIT_CAP", "abc", 1);
    CHECK_THROWS_AS(BoundsConfig::from_environment(), std::invalid_argument);
    ::unsetenv("ASA_DIGIT_CAP");
    CHECK(BoundsConfig::from_environment().digit_cap == BoundsConfig::kDefaultDigitCap);
}
