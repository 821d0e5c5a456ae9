#include "asa/progressions.hpp"

#include "asa/arith.hpp"
#include "asa/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asa {

namespace {

std::uint64_t mulmod_small(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return mulmod(a, b, m); }

// Kronecker symbol (disc / n) for n >= 1.
int kronecker(std::int64_t disc, std::uint64_t n) {
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        const std::int64_t r = mod_floor(disc, std::int64_t{8});
        if (r % 2 == 0)
            return 0;
        if (r == 3 || r == 5)
            result = -result;
    }
    return result * detail::jacobi_unchecked(BigInt(disc), BigInt(n));
}

std::int64_t squarefree_part(std::int64_t d) {
    const std::int64_t sign = d < 0 ? -1 : 1;
    BigInt n = abs(BigInt(d));
    std::int64_t out = 1;
    for (const auto& f : factor(n).factors)
        if (f.exponent % 2 == 1)
            out *= f.prime.convert_to<std::int64_t>();
    return sign * out;
}

} // namespace

AbelianExtension::AbelianExtension(std::uint64_t conductor, std::vector<std::uint64_t> subgroup) {
    if (conductor == 0)
        throw std::invalid_argument("conductor must be >= 1");
    if (conductor % 4 == 2)
        conductor /= 2;
    conductor_ = conductor;
    for (auto& r : subgroup)
        r %= conductor_;
    std::sort(subgroup.begin(), subgroup.end());
    subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
    subgroup_ = std::move(subgroup);

    const std::uint64_t one = 1 % conductor_;
    if (!std::binary_search(subgroup_.begin(), subgroup_.end(), one))
        throw std::invalid_argument("subgroup must contain 1");
    for (std::uint64_t r : subgroup_)
        if (std::gcd(r, conductor_) != 1)
            throw std::invalid_argument("subgroup element " + std::to_string(r) +
                                        " is not a unit mod " + std::to_string(conductor_));
    for (std::uint64_t a : subgroup_)
        for (std::uint64_t b : subgroup_)
            if (!contains(mulmod_small(a, b, conductor_)))
                throw std::invalid_argument("subgroup is not closed under multiplication mod " +
                                            std::to_string(conductor_));
    phi_ = euler_phi(conductor_);
}

AbelianExtension AbelianExtension::rationals() { return AbelianExtension(1, {0}); }

AbelianExtension AbelianExtension::cyclotomic(std::uint64_t m) { return AbelianExtension(m, {1}); }

AbelianExtension AbelianExtension::quadratic(std::int64_t d) {
    if (d == 0)
        throw std::invalid_argument("quadratic: d must be nonzero");
    const std::int64_t d0 = squarefree_part(d);
    if (d0 == 1)
        throw std::invalid_argument("quadratic: d is a perfect square");
    const std::int64_t disc = mod_floor(d0, std::int64_t{4}) == 1 ? d0 : 4 * d0;
    const auto m = static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1 && kronecker(disc, r) == 1)
            kernel.push_back(r);
    return AbelianExtension(m, std::move(kernel));
}

bool AbelianExtension::contains(std::uint64_t residue) const {
    return std::binary_search(subgroup_.begin(), subgroup_.end(), residue % conductor_);
}

std::uint64_t AbelianExtension::coset_label(std::uint64_t residue) const {
    residue %= conductor_;
    if (std::gcd(residue, conductor_) != 1)
        throw std::invalid_argument("residue " + std::to_string(residue) + " is not a unit mod " +
                                    std::to_string(conductor_));
    std::uint64_t best = conductor_;
    for (std::uint64_t h : subgroup_)
        best = std::min(best, mulmod_small(residue, h, conductor_));
    return best;
}

std::vector<std::uint64_t> AbelianExtension::units() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < conductor_; ++r)
        if (std::gcd(r, conductor_) == 1)
            out.push_back(r);
    return out;
}

std::vector<std::uint64_t> AbelianExtension::coset_labels() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r : units())
        if (coset_label(r) == r)
            out.push_back(r);
    return out;
}

std::string AbelianExtension::to_string() const {
    std::ostringstream os;
    os << "m=" << conductor_ << ",H={";
    for (std::size_t i = 0; i < subgroup_.size(); ++i)
        os << (i ? "," : "") << subgroup_[i];
    os << '}';
    return os.str();
}

ProgressionSpec::ProgressionSpec(AbelianExtension ext, std::uint64_t representative,
                                 std::vector<std::uint64_t> excluded_primes)
    : extension(std::move(ext)), class_label(extension.coset_label(representative)),
      excluded(std::move(excluded_primes)) {
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
}

ProgressionSpec ProgressionSpec::arithmetic(std::uint64_t a, std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("modulus must be >= 1");
    if (std::gcd(a % m, m) != 1 && m != 1)
        throw std::invalid_argument("gcd(a, m) != 1");
    std::vector<std::uint64_t> excluded;
    // Q(zeta_m) = Q(zeta_{m/2}) loses track of 2 dividing m.
    if (m % 4 == 2)
        excluded.push_back(2);
    return ProgressionSpec(AbelianExtension::cyclotomic(m), a, std::move(excluded));
}

ProgressionSpec ProgressionSpec::all_primes() {
    return ProgressionSpec(AbelianExtension::rationals(), 0);
}

std::string ProgressionSpec::to_string() const {
    std::ostringstream os;
    os << "P(" << extension.to_string() << ", class=" << class_label << ")";
    if (!excluded.empty()) {
        os << " minus {";
        for (std::size_t i = 0; i < excluded.size(); ++i)
            os << (i ? "," : "") << excluded[i];
        os << '}';
    }
    return os.str();
}

FrobeniusDatum frobenius(const AbelianExtension& ext, std::uint64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("frobenius: " + std::to_string(p) + " is not prime");
    if (ext.conductor() % p == 0)
        throw std::domain_error("frobenius: " + std::to_string(p) + " ramifies (divides conductor " +
                                std::to_string(ext.conductor()) + ")");
    return {p, ext.coset_label(p % ext.conductor())};
}

bool in_progression(const ProgressionSpec& spec, std::uint64_t p) {
    if (!is_prime(p) || spec.extension.conductor() % p == 0)
        return false;
    if (std::binary_search(spec.excluded.begin(), spec.excluded.end(), p))
        return false;
    return frobenius(spec.extension, p).class_label == spec.class_label;
}

bool splits_completely(const AbelianExtension& ext, std::uint64_t p) {
    if (!is_prime(p) || ext.conductor() % p == 0)
        return false;
    return ext.contains(p);
}

Rational chebotarev_density(const ProgressionSpec& spec) {
    return Rational(1, spec.extension.degree());
}

PrimeCounts count_primes_in_progression(const ProgressionSpec& spec, std::uint64_t x_bound) {
    const AbelianExtension& ext = spec.extension;
    const std::uint64_t m = ext.conductor();
    std::vector<char> in_class(m, 0);
    for (std::uint64_t r : ext.units())
        in_class[r] = ext.coset_label(r) == spec.class_label;

    PrimeCounts counts;
    for_each_prime(x_bound, [&](std::uint64_t p) {
        ++counts.total;
        if (m % p == 0)
            return;
        if (!in_class[p % m])
            return;
        if (std::binary_search(spec.excluded.begin(), spec.excluded.end(), p))
            return;
        ++counts.in_set;
    });
    return counts;
}

double natural_density_estimate(const ProgressionSpec& spec, std::uint64_t x_bound) {
    if (x_bound < 1000)
        throw std::invalid_argument("natural_density_estimate: x_bound must be >= 1000");
    const PrimeCounts c = count_primes_in_progression(spec, x_bound);
    return static_cast<double>(c.in_set) / static_cast<double>(c.total);
}

Rational intersection_density(const ProgressionSpec& spec, const AbelianExtension& other) {
    const AbelianExtension& ext = spec.extension;
    const std::uint64_t m = std::lcm(ext.conductor(), other.conductor());
    std::uint64_t units = 0;
    std::uint64_t hits = 0;
    for (std::uint64_t r = 0; r < m; ++r) {
        if (std::gcd(r, m) != 1)
            continue;
        ++units;
        if (ext.coset_label(r % ext.conductor()) == spec.class_label && other.contains(r % other.conductor()))
            ++hits;
    }
    return Rational(hits, units);
}

bool tractable_condition(const ProgressionSpec& spec, const AbelianExtension& target) {
    const AbelianExtension& ext = spec.extension;
    const std::uint64_t ml = ext.conductor();
    const std::uint64_t m = std::lcm(ml, target.conductor());

    // lift the class representative to a unit mod the compositum conductor
    std::uint64_t lift = spec.class_label % ml;
    while (std::gcd(lift, m) != 1)
        lift += ml;
    lift %= m;

    // sigma fixes P \cap L iff lift lies in H_L~ * H_P~
    for (std::uint64_t r = 0; r < m; ++r) {
        if (std::gcd(r, m) != 1 || !target.contains(r % target.conductor()))
            continue;
        if (ext.contains(mulmod(lift, r, m) % ml))
            return true;
    }
    return false;
}

} // namespace asa
