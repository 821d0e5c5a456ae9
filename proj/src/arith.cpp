#include "asa/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace asa {

namespace detail {

int jacobi_unchecked(BigInt a, BigInt n) {
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        unsigned twos = 0;
        while (!bit_test(a, 0)) {
            a >>= 1;
            ++twos;
        }
        if (twos & 1) {
            unsigned n8 = static_cast<unsigned>(n % 8);
            if (n8 == 3 || n8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace detail

namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

bool strong_probable_prime(const BigInt& n, const BigInt& a) {
    BigInt d = n - 1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    BigInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

BigInt half_mod(BigInt v, const BigInt& n) {
    v = mod_floor(v, n);
    if (bit_test(v, 0))
        v += n;
    return v >> 1;
}

// Strong Lucas test with Selfridge parameters (P = 1).
bool strong_lucas_probable_prime(const BigInt& n) {
    BigInt root = sqrt(n);
    if (root * root == n)
        return false;
    long long d_param = 5;
    while (true) {
        int j = detail::jacobi_unchecked(BigInt(d_param), n);
        if (j == -1)
            break;
        if (j == 0 && abs(BigInt(d_param)) != n)
            return false;
        d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
    }
    const BigInt D(d_param);
    const BigInt Q((1 - d_param) / 4);

    BigInt d = n + 1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }

    BigInt u = 1, v = 1, qk = mod_floor(Q, n);
    for (long bit = static_cast<long>(msb(d)) - 1; bit >= 0; --bit) {
        u = u * v % n;
        v = mod_floor(v * v - 2 * qk, n);
        qk = qk * qk % n;
        if (bit_test(d, static_cast<unsigned>(bit))) {
            BigInt u_next = half_mod(u + v, n);
            v = half_mod(D * u + v, n);
            u = u_next;
            qk = mod_floor(qk * Q, n);
        }
    }
    if (u == 0 || v == 0)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        v = mod_floor(v * v - 2 * qk, n);
        if (v == 0)
            return true;
        qk = qk * qk % n;
    }
    return false;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_odd(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_odd(d, out);
    factor_odd(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    for (std::uint64_t a : kWitnesses)
        if (!strong_probable_prime(n, a))
            return false;
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2)
        return false;
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return is_prime(n.convert_to<std::uint64_t>());
    for (std::uint64_t p : kWitnesses)
        if (n % p == 0)
            return false;
    return strong_probable_prime(n, BigInt(2)) && strong_lucas_probable_prime(n);
}

BigInt Factorization::product() const {
    BigInt out = 1;
    for (const auto& f : factors)
        out *= boost::multiprecision::pow(f.prime, f.exponent);
    return out;
}

Factorization factor(const BigInt& n) {
    static const BigInt kMax = BigInt(1) << 64;
    if (n < 1 || n > kMax)
        throw std::out_of_range("factor: input must satisfy 1 <= n <= 2^64, got " + n.str());
    Factorization result{n, {}};
    BigInt rest = n;
    unsigned twos = 0;
    while (rest > 1 && !bit_test(rest, 0)) {
        rest >>= 1;
        ++twos;
    }
    if (twos)
        result.factors.push_back({2, twos});

    std::uint64_t m = rest.convert_to<std::uint64_t>();
    std::map<std::uint64_t, unsigned> odd;
    for (std::uint64_t p = 3; p < 1000 && p * p <= m; p += 2)
        while (m % p == 0) {
            ++odd[p];
            m /= p;
        }
    factor_odd(m, odd);
    for (const auto& [p, e] : odd)
        result.factors.push_back({BigInt(p), e});
    return result;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 1)
        throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (m == 1)
        return 0;
    BigInt out;
    BigInt r = mod_floor(a, m);
    if (mpz_invert(out.backend().data(), r.backend().data(), m.backend().data()) == 0)
        throw std::domain_error("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
    return out;
}

Congruence crt_solve(const std::vector<Congruence>& congruences) {
    BigInt residue = 0;
    BigInt modulus = 1;
    for (const auto& [r, m] : congruences) {
        if (m < 1)
            throw std::invalid_argument("crt_solve: modulus must be >= 1, got " + m.str());
        BigInt g = gcd(modulus, m);
        BigInt diff = r - residue;
        if (diff % g != 0)
            throw std::domain_error("crt_solve: inconsistent congruences (x = " + r.str() + " mod " +
                                    m.str() + ")");
        BigInt m_red = m / g;
        BigInt step = mod_floor(diff / g * mod_inverse(modulus / g, m_red), m_red);
        residue += modulus * step;
        modulus *= m_red;
        residue = mod_floor(residue, modulus);
    }
    return {residue, modulus};
}

BigInt next_prime_in_progression(const BigInt& a, const BigInt& m, const BigInt& lower) {
    if (m < 1)
        throw std::invalid_argument("next_prime_in_progression: modulus must be >= 1");
    if (lower < 0)
        throw std::invalid_argument("next_prime_in_progression: lower bound must be >= 0");
    if (gcd(mod_floor(a, m), m) != 1 && m != 1)
        throw std::invalid_argument("next_prime_in_progression: gcd(" + a.str() + ", " + m.str() +
                                    ") != 1");
    BigInt candidate = lower + 1 + mod_floor(a - lower - 1, m);
    while (!is_prime(candidate))
        candidate += m;
    return candidate;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("euler_phi(0)");
    std::uint64_t phi = n;
    for (const auto& f : factor(BigInt(n)).factors) {
        std::uint64_t p = f.prime.convert_to<std::uint64_t>();
        phi = phi / p * (p - 1);
    }
    return phi;
}

} // namespace asa
