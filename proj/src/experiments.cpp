#include "asa/experiments.hpp"

#include "asa/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace asa {

// ---------------------------------------------------------------------------
// Biased prime sets

BiasedPrimePair build_biased_prime_sets(std::size_t ell) {
    if (ell == 0)
        throw std::invalid_argument("build_biased_prime_sets: ell must be >= 1");
    BiasedPrimePair sets;
    BigInt p_product = 1; // p_1 ... p_k
    BigInt q_product = 1; // q_1 ... q_k
    for (std::size_t k = 0; k < ell; ++k) {
        BigInt p = k == 0 ? BigInt(5) : next_prime_in_progression(1, 4 * q_product, 0);
        sets.p.push_back(p);
        p_product *= p;
        // q_1 must also exceed p_1; later moduli already exceed every earlier prime
        BigInt q = next_prime_in_progression(1, 4 * p_product, k == 0 ? p : BigInt(0));
        sets.q.push_back(q);
        q_product *= q;
    }
    return sets;
}

BiasedPrimeCertificate certify(const BiasedPrimePair& sets) {
    BiasedPrimeCertificate cert;
    auto all_of = [](const std::vector<BigInt>& v, auto pred) { return std::all_of(v.begin(), v.end(), pred); };

    cert.all_prime = all_of(sets.p, [](const BigInt& x) { return is_prime(x); }) &&
                     all_of(sets.q, [](const BigInt& x) { return is_prime(x); });
    cert.all_one_mod_4 = all_of(sets.p, [](const BigInt& x) { return x % 4 == 1; }) &&
                         all_of(sets.q, [](const BigInt& x) { return x % 4 == 1; });

    std::set<BigInt> seen(sets.p.begin(), sets.p.end());
    cert.disjoint = seen.size() == sets.p.size();
    for (const auto& q : sets.q)
        cert.disjoint = seen.insert(q).second && cert.disjoint;

    cert.cross_symbols_all_one = cert.all_prime;
    if (cert.all_prime) {
        for (const auto& p : sets.p)
            for (const auto& q : sets.q) {
                ++cert.symbols_checked;
                if (legendre(p, q) != 1)
                    cert.cross_symbols_all_one = false;
            }
    }

    cert.growth = !sets.p.empty();
    for (std::size_t l = 1; l < sets.p.size(); ++l)
        if (sets.p[l] <= boost::multiprecision::pow(sets.p[0], static_cast<unsigned>(l)))
            cert.growth = false;
    return cert;
}

// ---------------------------------------------------------------------------
// Density witnesses

CongruenceTarget::CongruenceTarget(std::vector<LocalCondition> conditions)
    : conditions_(std::move(conditions)) {
    std::set<std::uint64_t> primes;
    bool has_two = false;
    for (const auto& c : conditions_) {
        if (!is_prime(c.prime))
            throw std::invalid_argument("congruence target: " + std::to_string(c.prime) + " is not prime");
        if (c.exponent == 0)
            throw std::invalid_argument("congruence target: exponent at " + std::to_string(c.prime) +
                                        " must be >= 1");
        if (!primes.insert(c.prime).second)
            throw std::invalid_argument("congruence target: repeated prime " + std::to_string(c.prime));
        if (c.residue % c.prime == 0)
            throw std::invalid_argument("congruence target: residue " + c.residue.str() +
                                        " is divisible by " + std::to_string(c.prime));
        if (c.prime % 4 == 1)
            throw std::invalid_argument("congruence target: condition at " + std::to_string(c.prime) +
                                        " lies in P_{1(4)}, whose places belong to S");
        has_two = has_two || c.prime == 2;
    }
    if (!has_two)
        throw std::invalid_argument("congruence target: a condition at 2 is required");
}

const LocalCondition& CongruenceTarget::condition_at_two() const {
    return *std::find_if(conditions_.begin(), conditions_.end(),
                         [](const LocalCondition& c) { return c.prime == 2; });
}

bool CongruenceTarget::contains(const BigInt& x) const {
    for (const auto& c : conditions_) {
        const BigInt modulus = boost::multiprecision::pow(BigInt(c.prime), c.exponent);
        if (mod_floor(x - c.residue, modulus) != 0)
            return false;
    }
    return true;
}

DensityWitness density_witness(const CongruenceTarget& target) {
    const int sign = mod_floor(target.condition_at_two().residue, BigInt(4)) == 1 ? 1 : -1;
    std::vector<Congruence> system;
    for (const auto& c : target.conditions()) {
        const BigInt modulus = boost::multiprecision::pow(BigInt(c.prime), c.exponent);
        system.push_back({mod_floor(sign * c.residue, modulus), modulus});
    }
    system.push_back({1, 4});
    const Congruence c = crt_solve(system);
    const BigInt p = next_prime_in_progression(c.residue, c.modulus, 0);
    return {sign, p, c};
}

// ---------------------------------------------------------------------------
// Artin kernel evidence

ArtinKernelReport artin_kernel_evidence(std::uint64_t q, std::uint64_t sample_bound) {
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("artin_kernel_evidence: q must be a prime = 1 mod 4, got " +
                                    std::to_string(q));
    ArtinKernelReport report{q, sample_bound, Rational(q) > 0, {}, 0};
    const Rational q_rat(q);
    for (std::uint64_t p = q + 1; p <= sample_bound; p += q) {
        if (!is_prime(p))
            continue;
        const Place v = Place::finite(p);
        const Rational sampled_x[] = {Rational(-1), Rational(2), Rational(3), Rational(p),
                                      Rational(-static_cast<std::int64_t>(p)), Rational(2, 3),
                                      Rational(p * p + 1, 7)};
        bool hilbert_trivial = true;
        for (const auto& x : sampled_x)
            if (hilbert_symbol(x, q_rat, v) != 1)
                hilbert_trivial = false;
        ArtinSample s{p, is_square_in_qv(q_rat, v), legendre(q, p), hilbert_trivial};
        if (!s.square_in_qp || s.legendre != 1 || !s.hilbert_trivial)
            ++report.failures;
        report.samples.push_back(s);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Norm-one units

bool equal_split_valuations(const GaussianInteger& y) {
    if (y.norm() == 0)
        throw std::invalid_argument("equal_split_valuations: y must be nonzero");
    for (const auto& f : factor(BigInt(y.norm())).factors) {
        const auto p = f.prime.convert_to<std::uint64_t>();
        if (p % 4 != 1)
            continue;
        const GaussianInteger pi = split_prime_factor(p);
        if (gaussian_valuation(y, pi) != gaussian_valuation(y, pi.conj()))
            return false;
    }
    return true;
}

std::vector<GaussianInteger> norm_one_constrained_units(std::int64_t height_bound) {
    if (height_bound < 1 || height_bound > 100000)
        throw std::invalid_argument("norm_one_constrained_units: height bound must lie in [1, 100000]");
    std::set<GaussianInteger> found;
    for (std::int64_t u = -height_bound; u <= height_bound; ++u)
        for (std::int64_t v = -height_bound; v <= height_bound; ++v) {
            const GaussianInteger y{u, v};
            if (y.norm() == 0 || !equal_split_valuations(y))
                continue;
            // conj(y)/y = conj(y)^2 / N(y)
            const GaussianInteger yb = y.conj();
            auto x = exact_divide(yb * yb, y.norm());
            if (!x)
                throw std::logic_error("norm_one_constrained_units: survivor " + y.to_string() +
                                       " is not integral");
            found.insert(*x);
        }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Local power indices

namespace {

constexpr std::uint64_t kMaxCountedPrime = 1ull << 26;

std::uint64_t counted_power_index(std::uint64_t p, std::uint64_t n) {
    std::vector<bool> is_power(p, false);
    std::uint64_t powers = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
        const std::uint64_t y = powmod(x, n, p);
        if (!is_power[y]) {
            is_power[y] = true;
            ++powers;
        }
    }
    return (p - 1) / powers;
}

} // namespace

std::uint64_t local_power_index(std::uint64_t p, std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("local_power_index: n must be positive");
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("local_power_index: p must be a prime = 1 mod 4, got " +
                                    std::to_string(p));
    if (n % p == 0)
        throw std::invalid_argument("local_power_index: p divides n (wild case not supported)");
    if (p > kMaxCountedPrime)
        throw std::invalid_argument("local_power_index: p exceeds the counting range 2^26");
    const std::uint64_t index = std::gcd(n, p - 1);
    if (counted_power_index(p, n) != index)
        throw std::logic_error("local_power_index: gcd formula disagrees with power count");
    return index;
}

Section7Report section7_index_bound(std::uint64_t n, std::size_t ell, const std::vector<std::uint64_t>& primes) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("section7_index_bound: n must be odd and >= 3");
    if (primes.size() != ell)
        throw std::invalid_argument("section7_index_bound: expected " + std::to_string(ell) +
                                    " primes, got " + std::to_string(primes.size()));
    std::set<std::uint64_t> seen;
    for (std::uint64_t p : primes) {
        if (!is_prime(p) || p % (4 * n) != 1)
            throw std::invalid_argument("section7_index_bound: " + std::to_string(p) +
                                        " is not a prime = 1 mod " + std::to_string(4 * n));
        if (!seen.insert(p).second)
            throw std::invalid_argument("section7_index_bound: repeated prime " + std::to_string(p));
    }

    Section7Report report;
    report.n = n;
    report.primes = primes;
    report.product = 1;
    for (std::uint64_t p : primes) {
        report.local_indices.push_back(local_power_index(p, n));
        report.product *= report.local_indices.back();
        report.partial_products.push_back(report.product);
    }
    report.expected = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(ell));
    report.lower_bound = Rational(report.product, 4);
    report.product_matches = report.product == report.expected;
    report.monotone = true;
    for (std::size_t i = 1; i < report.partial_products.size(); ++i)
        if (report.partial_products[i] <= report.partial_products[i - 1])
            report.monotone = false;
    return report;
}

std::vector<std::uint64_t> first_primes_in_progression(std::size_t count, std::uint64_t a, std::uint64_t m) {
    std::vector<std::uint64_t> out;
    BigInt lower = 0;
    while (out.size() < count) {
        BigInt p = next_prime_in_progression(a, m, lower);
        out.push_back(p.convert_to<std::uint64_t>());
        lower = p;
    }
    return out;
}

} // namespace asa
