#pragma once

#include "asa/bigint.hpp"

#include <compare>
#include <string>
#include <vector>

namespace asa {

/// A place of Q: the archimedean one or the p-adic one for a prime p.
class Place {
public:
    static Place infinite() { return Place(); }
    /// Throws std::invalid_argument unless p is prime.
    static Place finite(const BigInt& p);

    bool is_infinite() const { return prime_ == 0; }
    const BigInt& prime() const { return prime_; }
    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;

private:
    Place() = default;
    BigInt prime_ = 0;
};

/// Class of a nonzero rational in Q_v^x modulo squares.
///
/// At infinity the class is the sign. At an odd prime it is the valuation
/// parity together with the quadratic character of the unit part. At 2 it is
/// the valuation parity together with the unit part modulo 8.
struct QpClass {
    Place place = Place::infinite();
    int valuation_parity = 0; // 0 or 1; always 0 at infinity
    int unit_residue = 1;     // sign at infinity, +-1 at odd p, {1,3,5,7} at 2

    /// Throws std::invalid_argument for a == 0.
    static QpClass of(const Rational& a, const Place& v);

    bool is_square() const;
};

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& a, const BigInt& p);

/// Legendre symbol via the reciprocity algorithm; p must be an odd prime.
int legendre(const BigInt& a, const BigInt& p);

/// Jacobi symbol; n must be odd and positive.
int jacobi(const BigInt& a, const BigInt& n);

bool is_square_in_qv(const Rational& a, const Place& v);

int hilbert_symbol(const QpClass& a, const QpClass& b);
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

struct LocalSymbol {
    Place place;
    int value;
};

struct HilbertProductReport {
    std::vector<LocalSymbol> factors; // infinity, 2, then the remaining bad primes ascending
    int product = 1;
};

/// Evaluates (a, b)_v at every place where it can be nontrivial.
HilbertProductReport hilbert_product_check(const Rational& a, const Rational& b);

} // namespace asa
