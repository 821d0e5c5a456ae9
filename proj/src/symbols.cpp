#include "asa/symbols.hpp"

#include "asa/arith.hpp"

#include <set>
#include <stdexcept>

namespace asa {

namespace {

long valuation(const BigInt& n, const BigInt& p) {
    long v = 0;
    BigInt m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

BigInt strip(BigInt n, const BigInt& p) {
    while (n % p == 0)
        n /= p;
    return n;
}

void add_prime_divisors(const BigInt& n, std::set<BigInt>& out) {
    for (const auto& f : factor(abs(n)).factors)
        out.insert(f.prime);
}

} // namespace

Place Place::finite(const BigInt& p) {
    if (!is_prime(p))
        throw std::invalid_argument("place: " + p.str() + " is not prime");
    Place out;
    out.prime_ = p;
    return out;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : prime_.str(); }

long valuation(const Rational& a, const BigInt& p) {
    if (a == 0)
        throw std::invalid_argument("valuation of zero");
    return valuation(numerator(a), p) - valuation(denominator(a), p);
}

int jacobi(const BigInt& a, const BigInt& n) {
    if (n < 1 || !bit_test(n, 0))
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + n.str());
    return detail::jacobi_unchecked(a, n);
}

int legendre(const BigInt& a, const BigInt& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime, got " + p.str());
    return detail::jacobi_unchecked(a, p);
}

QpClass QpClass::of(const Rational& a, const Place& v) {
    if (a == 0)
        throw std::invalid_argument("QpClass of zero");
    QpClass out;
    out.place = v;
    if (v.is_infinite()) {
        out.unit_residue = a > 0 ? 1 : -1;
        return out;
    }
    const BigInt& p = v.prime();
    out.valuation_parity = static_cast<int>(mod_floor(BigInt(valuation(a, p)), BigInt(2)));
    BigInt num = strip(numerator(a), p);
    BigInt den = strip(denominator(a), p);
    if (p == 2) {
        // den is odd, so den^-1 = den mod 8
        out.unit_residue = static_cast<int>(mod_floor(num * den, BigInt(8)));
    } else {
        out.unit_residue = detail::jacobi_unchecked(num * den, p);
    }
    return out;
}

bool QpClass::is_square() const { return valuation_parity == 0 && unit_residue == 1; }

bool is_square_in_qv(const Rational& a, const Place& v) { return QpClass::of(a, v).is_square(); }

int hilbert_symbol(const QpClass& a, const QpClass& b) {
    if (!(a.place == b.place))
        throw std::invalid_argument("hilbert_symbol: classes live at different places");
    if (a.place.is_infinite())
        return (a.unit_residue < 0 && b.unit_residue < 0) ? -1 : 1;

    const int alpha = a.valuation_parity;
    const int beta = b.valuation_parity;
    if (a.place.prime() == 2) {
        auto eps = [](int u) { return ((u - 1) / 2) & 1; };
        auto omega = [](int u) { return ((u * u - 1) / 8) & 1; };
        const int u = a.unit_residue;
        const int w = b.unit_residue;
        const int exponent = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return (exponent & 1) ? -1 : 1;
    }
    int result = 1;
    if (alpha && beta && a.place.prime() % 4 == 3)
        result = -result;
    if (beta && a.unit_residue == -1)
        result = -result;
    if (alpha && b.unit_residue == -1)
        result = -result;
    return result;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    return hilbert_symbol(QpClass::of(a, v), QpClass::of(b, v));
}

HilbertProductReport hilbert_product_check(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_product_check: arguments must be nonzero");
    std::set<BigInt> primes{2};
    add_prime_divisors(numerator(a), primes);
    add_prime_divisors(denominator(a), primes);
    add_prime_divisors(numerator(b), primes);
    add_prime_divisors(denominator(b), primes);

    HilbertProductReport report;
    const Place inf = Place::infinite();
    report.factors.push_back({inf, hilbert_symbol(a, b, inf)});
    for (const auto& p : primes) {
        Place v = Place::finite(p);
        report.factors.push_back({v, hilbert_symbol(a, b, v)});
    }
    for (const auto& f : report.factors)
        report.product *= f.value;
    return report;
}

} // namespace asa
