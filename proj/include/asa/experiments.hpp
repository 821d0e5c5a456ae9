#pragma once

#include "asa/arith.hpp"
#include "asa/bigint.hpp"
#include "asa/gaussian.hpp"

#include <cstdint>
#include <vector>

namespace asa {

// ---------------------------------------------------------------------------
// Two disjoint prime sets P, Q inside P_{1(4)} with (p/q) = 1 throughout.

struct BiasedPrimePair {
    std::vector<BigInt> p;
    std::vector<BigInt> q;
};

struct BiasedPrimeCertificate {
    std::size_t symbols_checked = 0;
    bool cross_symbols_all_one = false;
    bool disjoint = false;
    bool all_one_mod_4 = false;
    bool all_prime = false;
    bool growth = false; // p_l > p_1^(l-1) for every l > 1

    bool passed() const { return cross_symbols_all_one && disjoint && all_one_mod_4 && all_prime && growth; }
};

/// p_1 = 5; q_1 the smallest prime > p_1 with q_1 = 1 mod 4 p_1; then
/// p_{k+1} the smallest prime = 1 mod 4 q_1...q_k and q_{k+1} the smallest
/// prime = 1 mod 4 p_1...p_{k+1}.
BiasedPrimePair build_biased_prime_sets(std::size_t ell);
BiasedPrimeCertificate certify(const BiasedPrimePair& sets);

// ---------------------------------------------------------------------------
// Density witnesses for basic open sets prod (a_i + p_i^alpha_i Z_{p_i}).

struct LocalCondition {
    std::uint64_t prime;
    unsigned exponent;
    BigInt residue;
};

/// Conditions at 2 and at primes outside P_{1(4)}; primes distinct, residues
/// prime to their primes. Throws std::invalid_argument otherwise.
class CongruenceTarget {
public:
    explicit CongruenceTarget(std::vector<LocalCondition> conditions);

    const std::vector<LocalCondition>& conditions() const { return conditions_; }
    const LocalCondition& condition_at_two() const;
    /// Whether x lies in a_i + p_i^alpha_i Z for every condition.
    bool contains(const BigInt& x) const;

private:
    std::vector<LocalCondition> conditions_;
};

struct DensityWitness {
    int sign;            // epsilon
    BigInt prime;        // p = 1 mod 4
    Congruence residue;  // c and its modulus
};

DensityWitness density_witness(const CongruenceTarget& target);

// ---------------------------------------------------------------------------
// Local square evidence for the quadratic Artin map of Q(sqrt q).

struct ArtinSample {
    std::uint64_t prime;
    bool square_in_qp;
    int legendre;
    bool hilbert_trivial; // (x, q)_p = 1 for all sampled x
};

struct ArtinKernelReport {
    std::uint64_t q;
    std::uint64_t sample_bound;
    bool square_at_infinity;
    std::vector<ArtinSample> samples;
    std::size_t failures = 0;

    bool passed() const { return square_at_infinity && failures == 0; }
};

/// Requires q prime with q = 1 mod 4.
ArtinKernelReport artin_kernel_evidence(std::uint64_t q, std::uint64_t sample_bound);

// ---------------------------------------------------------------------------
// Norm-one elements of Q(i) that are integral at the split primes.

/// x = conj(y)/y is integral at both primes over every p = 1 (mod 4) dividing
/// N(y) exactly when y has equal valuations at those two primes.
bool equal_split_valuations(const GaussianInteger& y);

/// Distinct x = conj(y)/y over 0 != y = u + v i with |u|, |v| <= height_bound
/// that pass the split-valuation test, ascending.
std::vector<GaussianInteger> norm_one_constrained_units(std::int64_t height_bound);

// ---------------------------------------------------------------------------
// Finite index arithmetic for the norm-one torus of Q(i) over P_{3(4)}.

/// [F_p^x : F_p^x^n] = gcd(n, p - 1) for p = 1 mod 4, p not dividing n.
/// Cross-checked against an explicit count of n-th powers.
std::uint64_t local_power_index(std::uint64_t p, std::uint64_t n);

struct Section7Report {
    std::uint64_t n;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> local_indices;
    std::vector<BigInt> partial_products;
    BigInt product;
    BigInt expected; // n^ell
    Rational lower_bound; // n^ell / 4
    bool product_matches = false;
    bool monotone = false;

    bool passed() const { return product_matches && monotone; }
};

/// Requires n odd >= 3 and ell distinct primes, each = 1 mod 4n.
Section7Report section7_index_bound(std::uint64_t n, std::size_t ell, const std::vector<std::uint64_t>& primes);

/// The smallest `count` primes = a mod m.
std::vector<std::uint64_t> first_primes_in_progression(std::size_t count, std::uint64_t a, std::uint64_t m);

} // namespace asa
