#include "asa/bigint.hpp"

#include <gmp.h>

#include <cctype>
#include <stdexcept>

namespace asa {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

BigInt parse_bigint(const std::string& text) {
    if (!is_integer_literal(text))
        throw std::invalid_argument("not an integer: '" + text + "'");
    return BigInt(text[0] == '+' ? text.substr(1) : text);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("denominator must be unsigned: '" + text + "'");
    BigInt den = parse_bigint(den_text);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& m) {
    if (exp < 0)
        throw std::invalid_argument("powmod: negative exponent");
    BigInt result;
    BigInt b = mod_floor(base, m);
    mpz_powm(result.backend().data(), b.backend().data(), exp.backend().data(),
             m.backend().data());
    return result;
}

std::size_t decimal_digits(const BigInt& v) {
    if (v == 0)
        return 1;
    // mpz_sizeinbase may overshoot by one for base 10
    std::size_t estimate = mpz_sizeinbase(v.backend().data(), 10);
    BigInt threshold = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(estimate - 1));
    return abs(v) >= threshold ? estimate : estimate - 1;
}

} // namespace asa
