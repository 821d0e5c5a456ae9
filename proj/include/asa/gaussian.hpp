#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace asa {

/// a + b i in Z[i]. Exact for |a|, |b| below 2^31.
struct GaussianInteger {
    std::int64_t re = 0;
    std::int64_t im = 0;

    std::int64_t norm() const { return re * re + im * im; }
    GaussianInteger conj() const { return {re, -im}; }
    bool is_unit() const { return norm() == 1; }
    std::string to_string() const;

    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
    friend auto operator<=>(const GaussianInteger&, const GaussianInteger&) = default;
};

GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y);

/// x / y when y divides x in Z[i].
std::optional<GaussianInteger> exact_divide(const GaussianInteger& x, const GaussianInteger& y);

/// x / n for a rational integer n, when exact.
std::optional<GaussianInteger> exact_divide(const GaussianInteger& x, std::int64_t n);

/// Multiplicity of pi in x (x != 0).
unsigned gaussian_valuation(GaussianInteger x, const GaussianInteger& pi);

/// a + b i with a^2 + b^2 = p, a > b > 0, for a prime p = 1 (mod 4).
GaussianInteger split_prime_factor(std::uint64_t p);

} // namespace asa
