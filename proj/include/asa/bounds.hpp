#pragma once

#include "asa/bigint.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace asa {

struct BoundsConfig {
    static constexpr std::uint64_t kDefaultDigitCap = 1'000'000;

    /// Values with more decimal digits than this are reported by size only.
    std::uint64_t digit_cap = kDefaultDigitCap;

    /// Reads ASA_DIGIT_CAP; throws std::invalid_argument on a malformed value.
    static BoundsConfig from_environment();
};

/// Size of a value too large to materialize. All fields derive from
/// high-precision logarithms and are therefore approximate in principle.
struct SizeReport {
    /// floor(log10(value)) + 1, when the exponent itself can be materialized.
    std::optional<BigInt> digit_count;
    /// log10(value) in scientific notation, e.g. "1.2345e+4217".
    std::string log10_value;
    /// log10(log10(value)).
    std::string log10_log10_value;
};

using BoundValue = std::variant<BigInt, Rational, SizeReport>;

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    BoundValue value;
    std::string formula;

    bool materialized() const { return !std::holds_alternative<SizeReport>(value); }
    /// Throws DigitCapExceeded when only a size report is available.
    const BigInt& integer() const;
    Rational rational() const;
};

class DigitCapExceeded : public std::runtime_error {
public:
    explicit DigitCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// |GL_d(Z/3Z)| = prod_{i<d} (3^d - 3^i). Throws for d == 0.
BigInt gamma(unsigned d);
/// d * (gamma(d) - 1).
BigInt lambda(unsigned d);

/// gamma(d)^lambda(d).
BoundReport psi(unsigned d, const BoundsConfig& config = {});
/// Whether n divides psi(d), decided without materializing psi(d).
bool divides_psi(unsigned d, const BigInt& n);
/// n^d * psi(lambda(d)).
BoundReport c_tilde(unsigned d, const BigInt& n, const BoundsConfig& config = {});
/// n^d * gamma(d)^(lambda(d) (gamma(d) - 1)).
BoundReport c_tilde_improved(unsigned d, const BigInt& n, const BoundsConfig& config = {});
/// 2^(l r) * c_tilde(l, n).
BoundReport c_reductive(unsigned ell, const BigInt& n, unsigned r, const BoundsConfig& config = {});
/// density^-d * psi(lambda(d)).
BoundReport t1_density_bound(unsigned d, const Rational& density, const BoundsConfig& config = {});

/// 1 / (degree * density).
Rational dirichlet_index_bound(const BigInt& field_degree, const Rational& density);
/// [FL : F] / |C|, the sharper estimate available when F/K is Galois.
Rational galois_index_bound(const BigInt& compositum_degree, const BigInt& class_size);
/// 1 / density.
Rational spl0_index_bound(const Rational& density);

/// Approximate log10(gamma(d)) evaluated without materializing gamma(d).
double log10_gamma(const BigInt& d);

} // namespace asa
