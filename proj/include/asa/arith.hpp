#pragma once

#include "asa/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace asa {

/// Deterministic for n < 2^64 (Miller-Rabin with the first twelve prime bases).
bool is_prime(std::uint64_t n);
/// Fast path through the 64-bit test; Baillie-PSW above 2^64.
bool is_prime(const BigInt& n);

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    BigInt base;
    std::vector<PrimePower> factors; // primes strictly increasing

    BigInt product() const;
};

/// Complete factorization for 1 <= n <= 2^64. Throws std::out_of_range otherwise.
Factorization factor(const BigInt& n);

struct Congruence {
    BigInt residue;
    BigInt modulus;
    friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Solves the simultaneous system. Coprime moduli give the product modulus;
/// consistent non-coprime systems are merged through the lcm. Inconsistent
/// systems throw std::domain_error.
Congruence crt_solve(const std::vector<Congruence>& congruences);

/// Smallest prime p > lower with p = a (mod m). Throws std::invalid_argument
/// when gcd(a, m) != 1.
BigInt next_prime_in_progression(const BigInt& a, const BigInt& m, const BigInt& lower);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m, or throws std::domain_error if none exists.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

namespace detail {
// Binary Jacobi algorithm; n must be odd and positive (unchecked).
int jacobi_unchecked(BigInt a, BigInt n);
} // namespace detail

} // namespace asa
