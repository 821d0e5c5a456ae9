#include "asa/gaussian.hpp"

#include "asa/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace asa {

std::string GaussianInteger::to_string() const {
    if (im == 0)
        return std::to_string(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : std::to_string(im) + "i";
    if (re == 0)
        return imag;
    return std::to_string(re) + (im > 0 ? "+" : "") + imag;
}

GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

std::optional<GaussianInteger> exact_divide(const GaussianInteger& x, std::int64_t n) {
    if (n == 0 || x.re % n != 0 || x.im % n != 0)
        return std::nullopt;
    return GaussianInteger{x.re / n, x.im / n};
}

std::optional<GaussianInteger> exact_divide(const GaussianInteger& x, const GaussianInteger& y) {
    if (y.norm() == 0)
        return std::nullopt;
    return exact_divide(x * y.conj(), y.norm());
}

unsigned gaussian_valuation(GaussianInteger x, const GaussianInteger& pi) {
    if (x.norm() == 0)
        throw std::invalid_argument("gaussian_valuation of zero");
    if (pi.norm() <= 1)
        throw std::invalid_argument("gaussian_valuation: pi must not be zero or a unit");
    unsigned v = 0;
    while (auto q = exact_divide(x, pi)) {
        x = *q;
        ++v;
    }
    return v;
}

GaussianInteger split_prime_factor(std::uint64_t p) {
    if (p % 4 != 1 || !is_prime(p))
        throw std::invalid_argument("split_prime_factor: " + std::to_string(p) +
                                    " is not a prime = 1 mod 4");
    for (std::int64_t b = 1; 2 * b * b < static_cast<std::int64_t>(p); ++b) {
        const std::int64_t rest = static_cast<std::int64_t>(p) - b * b;
        const auto a = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        if (a * a == rest)
            return {a, b};
    }
    throw std::logic_error("split_prime_factor: no representation found");
}

} // namespace asa
