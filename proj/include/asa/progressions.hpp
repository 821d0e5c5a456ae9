#pragma once

#include "asa/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asa {

/// An abelian extension L/Q given as the fixed field of a subgroup H of
/// (Z/mZ)^x inside Q(zeta_m). Conductors m = 2 (mod 4) are normalized to m/2.
class AbelianExtension {
public:
    /// Throws std::invalid_argument if `subgroup` is not a subgroup of (Z/mZ)^x.
    AbelianExtension(std::uint64_t conductor, std::vector<std::uint64_t> subgroup);

    static AbelianExtension rationals();
    static AbelianExtension cyclotomic(std::uint64_t m);
    /// Q(sqrt(D)) for a fundamental-or-not nonsquare integer D, via the
    /// kernel of the Kronecker character of its discriminant.
    static AbelianExtension quadratic(std::int64_t d);

    std::uint64_t conductor() const { return conductor_; }
    const std::vector<std::uint64_t>& subgroup() const { return subgroup_; }
    std::uint64_t group_order() const { return phi_; }
    std::uint64_t degree() const { return phi_ / subgroup_.size(); }

    bool contains(std::uint64_t residue) const;
    /// Smallest element of residue * H; the canonical label of a Galois element.
    std::uint64_t coset_label(std::uint64_t residue) const;
    /// Canonical labels of all cosets, ascending.
    std::vector<std::uint64_t> coset_labels() const;
    /// Units mod the conductor, ascending.
    std::vector<std::uint64_t> units() const;

    std::string to_string() const;

    friend bool operator==(const AbelianExtension&, const AbelianExtension&) = default;

private:
    std::uint64_t conductor_;
    std::vector<std::uint64_t> subgroup_; // sorted, residues in [0, m)
    std::uint64_t phi_;
};

struct FrobeniusDatum {
    std::uint64_t prime;
    std::uint64_t class_label; // coset label of p in (Z/mZ)^x / H
};

/// Primes whose Frobenius in Gal(L/Q) is the single element labelled `class_label`,
/// minus a finite exclusion list.
struct ProgressionSpec {
    AbelianExtension extension;
    std::uint64_t class_label;
    std::vector<std::uint64_t> excluded;

    /// Validates and canonicalizes the class representative.
    ProgressionSpec(AbelianExtension ext, std::uint64_t representative,
                    std::vector<std::uint64_t> excluded = {});

    /// P_{a(m)}: primes = a mod m.
    static ProgressionSpec arithmetic(std::uint64_t a, std::uint64_t m);
    static ProgressionSpec all_primes();

    std::string to_string() const;
};

/// Throws std::domain_error when p divides the conductor (ramified).
FrobeniusDatum frobenius(const AbelianExtension& ext, std::uint64_t p);
bool in_progression(const ProgressionSpec& spec, std::uint64_t p);
bool splits_completely(const AbelianExtension& ext, std::uint64_t p);

Rational chebotarev_density(const ProgressionSpec& spec);

/// pi(x; spec) / pi(x) from an exact sieve. This estimates natural density,
/// which agrees with Dirichlet density for every representable set.
double natural_density_estimate(const ProgressionSpec& spec, std::uint64_t x_bound);

struct PrimeCounts {
    std::uint64_t in_set = 0;
    std::uint64_t total = 0;
};
PrimeCounts count_primes_in_progression(const ProgressionSpec& spec, std::uint64_t x_bound);

/// Density of primes in `spec` that split completely in `other`, computed in
/// (Z/lcm(m1, m2)Z)^x.
Rational intersection_density(const ProgressionSpec& spec, const AbelianExtension& other);

/// Whether the Frobenius class of `spec` restricts to the identity on the
/// intersection of its field with `target`.
bool tractable_condition(const ProgressionSpec& spec, const AbelianExtension& target);

} // namespace asa
