#include "asa/arith.hpp"
#include "asa/progressions.hpp"
#include "asa/sieve.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace asa;

namespace {

const AbelianExtension kGaussian = AbelianExtension::cyclotomic(4);

} // namespace

TEST_CASE("abelian extension construction") {
    CHECK(kGaussian.degree() == 2);
    CHECK(AbelianExtension::rationals().degree() == 1);
    CHECK(AbelianExtension::cyclotomic(5).degree() == 4);
    // m = 2 mod 4 collapses to m / 2.
    CHECK(AbelianExtension::cyclotomic(10).conductor() == 5);
    CHECK(AbelianExtension::cyclotomic(2).degree() == 1);
    const AbelianExtension q2(8, {1, 7});
    CHECK(q2.degree() == 2);
    CHECK(AbelianExtension::quadratic(2) == q2);
    CHECK(AbelianExtension::quadratic(-1) == kGaussian);
    CHECK(AbelianExtension::quadratic(5).conductor() == 5);
    CHECK(AbelianExtension::quadratic(-3).conductor() == 3);
    CHECK_THROWS_AS(AbelianExtension(8, {1, 3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianExtension(8, {3}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianExtension(8, {1, 2}), std::invalid_argument);
}

TEST_CASE("frobenius classes") {
    CHECK(frobenius(kGaussian, 5).class_label == 1);
    CHECK(frobenius(kGaussian, 3).class_label == 3);
    CHECK(frobenius(AbelianExtension(8, {1, 7}), 17).class_label == 1);
    CHECK_THROWS_AS(frobenius(kGaussian, 2), std::domain_error);
    CHECK_THROWS_AS(frobenius(kGaussian, 9), std::invalid_argument);
}

TEST_CASE("frobenius is multiplicative on residues") {
    const AbelianExtension ext(15, {1, 4});
    const auto primes = primes_up_to(400);
    for (auto p : primes)
        for (auto q : primes) {
            if (15 % p == 0 || 15 % q == 0)
                continue;
            const auto cp = frobenius(ext, p).class_label, cq = frobenius(ext, q).class_label;
            CHECK(ext.coset_label((p * q) % 15) == ext.coset_label((cp * cq) % 15));
        }
}

TEST_CASE("progression membership and splitting") {
    const auto p14 = ProgressionSpec::arithmetic(1, 4);
    CHECK(in_progression(p14, 13));
    CHECK_FALSE(in_progression(p14, 2));
    CHECK(in_progression(ProgressionSpec::arithmetic(1, 5), 11));
    CHECK(splits_completely(kGaussian, 5));
    CHECK_FALSE(splits_completely(kGaussian, 3));
    CHECK_FALSE(splits_completely(kGaussian, 2));

    ProgressionSpec with_exclusion(kGaussian, 1, {5, 13});
    CHECK_FALSE(in_progression(with_exclusion, 13));
    CHECK(in_progression(with_exclusion, 17));

    for (std::uint64_t m : {3ULL, 4ULL, 5ULL, 8ULL, 12ULL, 15ULL, 21ULL}) {
        const auto ext = AbelianExtension::cyclotomic(m);
        const ProgressionSpec trivial(ext, 1);
        for (auto p : primes_up_to(500))
            if (m % p != 0)
                CHECK(splits_completely(ext, p) == in_progression(trivial, p));
    }
}

TEST_CASE("chebotarev densities") {
    CHECK(chebotarev_density(ProgressionSpec::arithmetic(1, 4)) == Rational(1, 2));
    CHECK(chebotarev_density(ProgressionSpec::arithmetic(1, 5)) == Rational(1, 4));
    CHECK(chebotarev_density(ProgressionSpec::all_primes()) == 1);
    CHECK(chebotarev_density(ProgressionSpec(AbelianExtension(8, {1, 7}), 3)) == Rational(1, 2));
    for (std::uint64_t m = 1; m <= 40; ++m) {
        const auto ext = AbelianExtension::cyclotomic(m);
        Rational total = 0;
        for (auto label : ext.coset_labels())
            total += chebotarev_density(ProgressionSpec(ext, label));
        CHECK(total == 1);
    }
    // Subgroup H of index 2 in (Z/15)^x: sum over the cosets is 1 as well.
    const AbelianExtension h(15, {1, 4, 11, 14});
    Rational total = 0;
    for (auto label : h.coset_labels())
        total += chebotarev_density(ProgressionSpec(h, label));
    CHECK(total == 1);
}

TEST_CASE("sieve counts match trial division") {
    const auto primes = primes_up_to(10000);
    std::size_t want = 0;
    for (std::uint64_t n = 0; n <= 10000; ++n)
        want += oracle::is_prime(n);
    CHECK(primes.size() == want);

    std::uint64_t in_set = 0, total = 0;
    for (std::uint64_t n = 2; n <= 50000; ++n)
        if (oracle::is_prime(n)) {
            ++total;
            in_set += n % 5 == 1;
        }
    const auto c = count_primes_in_progression(ProgressionSpec::arithmetic(1, 5), 50000);
    CHECK(c.total == total);
    CHECK(c.in_set == in_set);
}

TEST_CASE("natural density estimates converge for small conductors") {
    const std::uint64_t x = 1'000'000;
    CHECK(natural_density_estimate(ProgressionSpec::all_primes(), x) == 1.0);
    for (std::uint64_t m = 3; m <= 24; ++m) {
        if (m % 4 == 2)
            continue;
        const auto ext = AbelianExtension::cyclotomic(m);
        for (auto label : ext.coset_labels()) {
            const ProgressionSpec spec(ext, label);
            const double est = natural_density_estimate(spec, x);
            CHECK_MESSAGE(std::abs(est - chebotarev_density(spec).convert_to<double>()) <= 0.02,
                          spec.to_string());
        }
    }
    CHECK_THROWS_AS(natural_density_estimate(ProgressionSpec::arithmetic(1, 4), 10), std::invalid_argument);
}

TEST_CASE("intersection densities by coset counting") {
    CHECK(intersection_density(ProgressionSpec::arithmetic(1, 4), kGaussian) == Rational(1, 2));
    CHECK(intersection_density(ProgressionSpec::arithmetic(3, 4), kGaussian) == 0);
    CHECK(intersection_density(ProgressionSpec::arithmetic(1, 4), AbelianExtension::cyclotomic(5)) ==
          Rational(1, 8));

    // Brute force: count residues mod lcm that land in both sets.
    for (std::uint64_t m1 : {3ULL, 4ULL, 5ULL, 8ULL})
        for (std::uint64_t m2 : {3ULL, 4ULL, 7ULL, 12ULL}) {
            const auto ext1 = AbelianExtension::cyclotomic(m1);
            const auto ext2 = AbelianExtension::cyclotomic(m2);
            const std::uint64_t l = lcm_u64(m1, m2);
            for (auto label : ext1.coset_labels()) {
                const ProgressionSpec spec(ext1, label);
                std::uint64_t hits = 0, units = 0;
                for (std::uint64_t r = 1; r < l; ++r) {
                    if (gcd_u64(r, l) != 1)
                        continue;
                    ++units;
                    hits += (r % m1 == label % m1) && (r % m2 == 1 % m2);
                }
                CHECK(intersection_density(spec, ext2) == Rational(hits, units));
            }
        }
}

TEST_CASE("tractable condition") {
    CHECK(tractable_condition(ProgressionSpec::arithmetic(1, 4), kGaussian));
    CHECK_FALSE(tractable_condition(ProgressionSpec::arithmetic(3, 4), kGaussian));
    for (std::uint64_t m : {3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 12ULL}) {
        const auto ext = AbelianExtension::cyclotomic(m);
        for (auto label : ext.coset_labels()) {
            const ProgressionSpec spec(ext, label);
            CHECK(tractable_condition(spec, AbelianExtension::rationals()));
            for (std::uint64_t t : {3ULL, 4ULL, 5ULL, 8ULL, 20ULL})
                if (tractable_condition(spec, AbelianExtension::cyclotomic(t)))
                    CHECK(intersection_density(spec, AbelianExtension::cyclotomic(t)) > 0);
        }
    }
    // Disjoint fields: the condition is vacuous.
    CHECK(tractable_condition(ProgressionSpec::arithmetic(2, 5), kGaussian));
}
