#include "asa/experiments.hpp"
#include "asa/symbols.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace asa;

TEST_CASE("biased prime sets for small ell") {
    const auto one = build_biased_prime_sets(1);
    CHECK(one.p == std::vector<BigInt>{5});
    CHECK(one.q == std::vector<BigInt>{41});
    CHECK(oracle::is_prime(41));
    CHECK(41 % 4 == 1);
    CHECK(41 % 5 == 1);
    // No smaller prime is 1 mod 20.
    CHECK_FALSE(oracle::is_prime(21));

    const auto four = build_biased_prime_sets(4);
    REQUIRE(four.p.size() == 4);
    REQUIRE(four.q.size() == 4);
    CHECK(certify(four).passed());
    CHECK(certify(four).symbols_checked == 16);
    // Independent recheck of every symbol through Euler's criterion where it fits in 64 bits,
    // and through the library otherwise.
    for (const auto& p : four.p)
        for (const auto& q : four.q) {
            CHECK(legendre(p, q) == 1);
            CHECK(legendre(q, p) == 1);
        }
    // Each step really takes the smallest qualifying prime.
    CHECK(four.p[1] == 821);
    for (std::uint64_t x = 1; x < 821; x += 4 * 41)
        CHECK_FALSE(oracle::is_prime(x));
}

TEST_CASE("biased prime certificate detects a bad pair") {
    BiasedPrimePair bad{{5}, {13}}; // (5/13) = -1
    CHECK_FALSE(certify(bad).cross_symbols_all_one);
    BiasedPrimePair overlap{{5}, {5}};
    CHECK_FALSE(certify(overlap).disjoint);
}

TEST_CASE("congruence target validation") {
    CHECK_NOTHROW(CongruenceTarget({{2, 2, 1}}));
    CHECK_THROWS_AS(CongruenceTarget({{3, 1, 1}}), std::invalid_argument);          // no condition at 2
    CHECK_THROWS_AS(CongruenceTarget({{2, 2, 1}, {5, 1, 1}}), std::invalid_argument); // 5 = 1 mod 4
    CHECK_THROWS_AS(CongruenceTarget({{2, 2, 2}}), std::invalid_argument);          // residue not a unit
    CHECK_THROWS_AS(CongruenceTarget({{2, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceTarget({{2, 1, 1}, {2, 2, 1}}), std::invalid_argument);
}

TEST_CASE("density witnesses") {
    const auto w1 = density_witness(CongruenceTarget({{2, 2, 1}}));
    CHECK(w1.sign == 1);
    CHECK(w1.prime == 5);

    const CongruenceTarget t3({{2, 2, 3}});
    const auto w3 = density_witness(t3);
    CHECK(w3.sign == -1);
    CHECK(w3.prime % 4 == 1);
    CHECK(t3.contains(w3.sign * w3.prime));

    const CongruenceTarget two({{2, 3, 3}, {7, 1, 2}});
    const auto w = density_witness(two);
    const BigInt x = w.sign * w.prime;
    CHECK(mod_floor(x - 3, BigInt(8)) == 0);
    CHECK(mod_floor(x - 2, BigInt(7)) == 0);
    CHECK(oracle::is_prime(w.prime.convert_to<std::uint64_t>()));
}

TEST_CASE("density witnesses on random targets") {
    std::mt19937_64 rng(3);
    const std::vector<std::uint64_t> pool = {3, 7, 11, 19, 23, 31, 43, 47};
    for (int i = 0; i < 100; ++i) {
        std::vector<LocalCondition> cs;
        const unsigned e2 = 1 + rng() % 3;
        cs.push_back({2, e2, BigInt(2 * (rng() % 8) + 1)});
        std::vector<std::uint64_t> chosen = pool;
        std::shuffle(chosen.begin(), chosen.end(), rng);
        const std::size_t extra = rng() % 3;
        for (std::size_t k = 0; k < extra; ++k) {
            const std::uint64_t p = chosen[k];
            cs.push_back({p, static_cast<unsigned>(1 + rng() % 3), BigInt(1 + rng() % (p - 1))});
        }
        const CongruenceTarget target(cs);
        const auto w = density_witness(target);
        const BigInt x = w.sign * w.prime;
        const auto p = w.prime.convert_to<std::uint64_t>();
        REQUIRE(oracle::is_prime(p));
        CHECK(p % 4 == 1);
        for (const auto& c : cs) {
            BigInt mod = 1;
            for (unsigned k = 0; k < c.exponent; ++k)
                mod *= c.prime;
            CHECK(mod_floor(x - c.residue, mod) == 0);
        }
    }
}

TEST_CASE("artin kernel evidence") {
    const auto r5 = artin_kernel_evidence(5, 1000);
    CHECK(r5.square_at_infinity);
    CHECK(r5.failures == 0);
    REQUIRE(r5.samples.size() >= 3);
    CHECK(r5.samples[0].prime == 11);
    CHECK(r5.samples[1].prime == 31);
    CHECK(r5.samples[2].prime == 41);
    for (const auto& s : r5.samples) {
        CHECK(s.square_in_qp);
        CHECK(s.legendre == 1);
        CHECK(oracle::euler_legendre(5, s.prime) == 1);
        CHECK(s.hilbert_trivial);
    }
    std::size_t expected = 0;
    for (std::uint64_t p = 2; p <= 1000; ++p)
        expected += oracle::is_prime(p) && p % 5 == 1;
    CHECK(r5.samples.size() == expected);

    const auto r13 = artin_kernel_evidence(13, 1000);
    CHECK(r13.passed());
    CHECK_THROWS_AS(artin_kernel_evidence(7, 100), std::invalid_argument);
}

TEST_CASE("norm-one constrained units") {
    const std::vector<GaussianInteger> units = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    CHECK(norm_one_constrained_units(1) == units);
    CHECK(norm_one_constrained_units(20) == units);
    std::size_t previous = 0;
    for (std::int64_t h = 1; h <= 50; h += 7) {
        const auto got = norm_one_constrained_units(h);
        CHECK(got.size() >= previous);
        previous = got.size();
        CHECK(got == units);
    }
    // y = 2 + i lies over the split prime 5 with unequal valuations.
    CHECK_FALSE(equal_split_valuations({2, 1}));
    CHECK(equal_split_valuations({5, 0}));
    CHECK(equal_split_valuations({3, 0}));
    CHECK(equal_split_valuations({1, 1}));
}

TEST_CASE("gaussian arithmetic") {
    const GaussianInteger a{2, 1}, b{2, -1};
    CHECK(a * b == GaussianInteger{5, 0});
    CHECK(exact_divide(GaussianInteger{5, 0}, a) == b);
    CHECK_FALSE(exact_divide(GaussianInteger{3, 0}, a).has_value());
    CHECK(gaussian_valuation({25, 0}, a) == 2);
    for (std::uint64_t p = 5; p < 400; p += 4)
        if (oracle::is_prime(p)) {
            const auto f = split_prime_factor(p);
            CHECK(static_cast<std::uint64_t>(f.norm()) == p);
            CHECK(f.re > f.im);
            CHECK(f.im > 0);
        }
}

TEST_CASE("local power index") {
    CHECK(local_power_index(13, 3) == 3);
    CHECK(local_power_index(5, 3) == 1);
    CHECK(local_power_index(13, 1) == 1);
    for (std::uint64_t p = 5; p < 400; p += 4) {
        if (!oracle::is_prime(p))
            continue;
        for (std::uint64_t n = 1; n <= 12; ++n) {
            if (n % p == 0)
                continue;
            CHECK(local_power_index(p, n) == (p - 1) / oracle::count_nth_powers(p, n));
        }
    }
    CHECK_THROWS_AS(local_power_index(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(local_power_index(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(local_power_index(13, 13), std::invalid_argument);
}

TEST_CASE("local power-index products over primes 1 mod 4n") {
    const auto r1 = section7_index_bound(3, 1, {13});
    CHECK(r1.product == 3);
    CHECK(r1.lower_bound == Rational(3, 4));
    const auto r3 = section7_index_bound(3, 3, {13, 37, 61});
    CHECK(r3.product == 27);
    CHECK(r3.lower_bound == Rational(27, 4));
    CHECK(r3.passed());
    const auto r2 = section7_index_bound(5, 2, {41, 61});
    CHECK(r2.product == 25);
    CHECK(r2.lower_bound == Rational(25, 4));
    CHECK_THROWS_AS(section7_index_bound(3, 1, {7}), std::invalid_argument);
    CHECK_THROWS_AS(section7_index_bound(4, 1, {17}), std::invalid_argument);
    CHECK(first_primes_in_progression(3, 1, 12) == std::vector<std::uint64_t>{13, 37, 61});
}
