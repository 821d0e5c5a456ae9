#include "asa/bounds.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <limits>

namespace asa {

namespace {

// Minimal RAII handle for an mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
    ~Real() { mpfr_clear(value_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    std::string scientific() const {
        char* buffer = nullptr;
        mpfr_asprintf(&buffer, "%.12Re", value_);
        std::string out(buffer);
        mpfr_free_str(buffer);
        return out;
    }

private:
    mpfr_t value_;
};

void set_bigint(Real& r, const BigInt& v) { mpfr_set_z(r.get(), v.backend().data(), MPFR_RNDN); }

void log10_of(Real& out, const BigInt& v) {
    Real tmp(mpfr_get_prec(out.get()));
    set_bigint(tmp, v);
    mpfr_log10(out.get(), tmp.get(), MPFR_RNDN);
}

void log10_of(Real& out, const Rational& q) {
    Real den(mpfr_get_prec(out.get()));
    log10_of(out, numerator(q));
    log10_of(den, denominator(q));
    mpfr_sub(out.get(), out.get(), den.get(), MPFR_RNDN);
}

BigInt floor_to_bigint(const Real& r) {
    BigInt out;
    mpfr_get_z(out.backend().data(), r.get(), MPFR_RNDD);
    return out;
}

// Largest argument whose gamma value we are willing to build exactly in
// order to get an exact exponent: its digit count is about 0.477 k^2.
bool gamma_materializable(const BigInt& k, std::uint64_t digit_cap) {
    if (k > 100000)
        return false;
    const double kk = k.convert_to<double>();
    return 0.4771212547196624 * kk * kk <= static_cast<double>(digit_cap);
}

// log10(gamma(k)) = k^2 log10(3) + sum_{j=1..k} log10(1 - 3^-j), without
// building gamma(k).
void log10_gamma_series(Real& out, const BigInt& k) {
    const mpfr_prec_t prec = mpfr_get_prec(out.get());
    Real three(prec), term(prec), sum(prec), kk(prec);
    mpfr_set_ui(three.get(), 3, MPFR_RNDN);
    mpfr_log10(out.get(), three.get(), MPFR_RNDN);
    set_bigint(kk, k);
    mpfr_sqr(kk.get(), kk.get(), MPFR_RNDN);
    mpfr_mul(out.get(), out.get(), kk.get(), MPFR_RNDN);

    mpfr_set_zero(sum.get(), 1);
    const std::uint64_t terms =
        k < prec ? k.convert_to<std::uint64_t>() : static_cast<std::uint64_t>(prec);
    for (std::uint64_t j = 1; j <= terms; ++j) {
        // log10(1 - 3^-j)
        mpfr_ui_pow_ui(term.get(), 3, j, MPFR_RNDN);
        mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
        mpfr_neg(term.get(), term.get(), MPFR_RNDN);
        mpfr_log1p(term.get(), term.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    Real ten(prec);
    mpfr_set_ui(ten.get(), 10, MPFR_RNDN);
    mpfr_log(ten.get(), ten.get(), MPFR_RNDN);
    mpfr_div(sum.get(), sum.get(), ten.get(), MPFR_RNDN);
    mpfr_add(out.get(), out.get(), sum.get(), MPFR_RNDN);
}

std::size_t rational_digits(const Rational& q) {
    return std::max(decimal_digits(numerator(q)), decimal_digits(denominator(q)));
}

// Evaluates coefficient * gamma(k)^(a * (gamma(k) - 1)), materializing when
// the result fits under the digit cap.
BoundValue evaluate_power(const Rational& coefficient, const BigInt& k, const BigInt& a,
                          const BoundsConfig& config) {
    constexpr mpfr_prec_t kWorkingPrecision = 256;
    const bool exact_gamma = gamma_materializable(k, config.digit_cap);

    std::optional<BigInt> gamma_k;
    std::optional<BigInt> exponent;
    if (exact_gamma) {
        gamma_k = gamma(k.convert_to<unsigned>());
        exponent = a * (*gamma_k - 1);
    }

    const mpfr_prec_t prec =
        exponent ? static_cast<mpfr_prec_t>(msb(*exponent) + 1) + kWorkingPrecision : kWorkingPrecision;
    Real log_gamma(prec), log_value(prec), log_coeff(prec), scratch(prec);
    if (gamma_k)
        log10_of(log_gamma, *gamma_k);
    else
        log10_gamma_series(log_gamma, k);

    if (exponent) {
        set_bigint(scratch, *exponent);
    } else {
        // a * (gamma(k) - 1) ~ a * 10^log10(gamma(k))
        Real ten(prec);
        mpfr_set_ui(ten.get(), 10, MPFR_RNDN);
        mpfr_pow(scratch.get(), ten.get(), log_gamma.get(), MPFR_RNDN);
        Real a_real(prec);
        set_bigint(a_real, a);
        mpfr_mul(scratch.get(), scratch.get(), a_real.get(), MPFR_RNDN);
    }
    mpfr_mul(log_value.get(), log_gamma.get(), scratch.get(), MPFR_RNDN);
    log10_of(log_coeff, coefficient);
    mpfr_add(log_value.get(), log_value.get(), log_coeff.get(), MPFR_RNDN);

    const bool small_enough =
        mpfr_cmp_ui(log_value.get(), config.digit_cap + 1) <= 0 && exponent &&
        *exponent <= std::numeric_limits<unsigned>::max();
    if (small_enough) {
        BigInt power = boost::multiprecision::pow(*gamma_k, exponent->convert_to<unsigned>());
        Rational value = coefficient * Rational(power);
        if (rational_digits(value) <= config.digit_cap) {
            if (denominator(value) == 1)
                return BigInt(numerator(value));
            return value;
        }
    }

    SizeReport report;
    if (exponent) {
        mpfr_floor(scratch.get(), log_value.get());
        report.digit_count = floor_to_bigint(scratch) + 1;
    }
    report.log10_value = log_value.scientific();
    mpfr_log10(scratch.get(), log_value.get(), MPFR_RNDN);
    report.log10_log10_value = scratch.scientific();
    return report;
}

std::string describe(const BoundValue& v) {
    if (const auto* s = std::get_if<SizeReport>(&v))
        return "log10(value) ~ " + s->log10_value;
    return "";
}

void require_rank(unsigned d, const char* what) {
    if (d == 0)
        throw std::invalid_argument(std::string(what) + ": rank must be >= 1");
}

void require_density(const Rational& density, const char* what) {
    if (density <= 0 || density > 1)
        throw std::invalid_argument(std::string(what) + ": density must lie in (0, 1], got " +
                                    to_string(density));
}

} // namespace

BoundsConfig BoundsConfig::from_environment() {
    BoundsConfig config;
    if (const char* raw = std::getenv("ASA_DIGIT_CAP")) {
        std::string text(raw);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("ASA_DIGIT_CAP must be a positive decimal integer, got '" +
                                        text + "'");
        config.digit_cap = std::stoull(text);
        if (config.digit_cap == 0)
            throw std::invalid_argument("ASA_DIGIT_CAP must be positive");
    }
    return config;
}

const BigInt& BoundReport::integer() const {
    if (const auto* v = std::get_if<BigInt>(&value))
        return *v;
    if (std::holds_alternative<Rational>(value))
        throw std::logic_error(name + " is not an integer");
    throw DigitCapExceeded(name + " exceeds the digit cap (" + describe(value) + ")");
}

Rational BoundReport::rational() const {
    if (const auto* v = std::get_if<BigInt>(&value))
        return Rational(*v);
    if (const auto* v = std::get_if<Rational>(&value))
        return *v;
    throw DigitCapExceeded(name + " exceeds the digit cap (" + describe(value) + ")");
}

BigInt gamma(unsigned d) {
    require_rank(d, "gamma");
    const BigInt top = boost::multiprecision::pow(BigInt(3), d);
    BigInt out = 1;
    BigInt low = 1;
    for (unsigned i = 0; i < d; ++i) {
        out *= top - low;
        low *= 3;
    }
    return out;
}

BigInt lambda(unsigned d) {
    require_rank(d, "lambda");
    return BigInt(d) * (gamma(d) - 1);
}

double log10_gamma(const BigInt& d) {
    Real out(128);
    log10_gamma_series(out, d);
    return mpfr_get_d(out.get(), MPFR_RNDN);
}

BoundReport psi(unsigned d, const BoundsConfig& config) {
    require_rank(d, "psi");
    return {"psi",
            {{"d", std::to_string(d)}},
            evaluate_power(Rational(1), BigInt(d), BigInt(d), config),
            "psi(d) = gamma(d)^(d (gamma(d) - 1))"};
}

bool divides_psi(unsigned d, const BigInt& n) {
    if (n < 1)
        throw std::invalid_argument("divides_psi: n must be positive");
    // n | g^k iff k rounds of n <- n / gcd(n, g) reach 1; each round strips
    // min(v_p(n), v_p(g)) from every prime, so the loop ends after log2(n) rounds.
    const BigInt g = gamma(d);
    const BigInt k = lambda(d);
    BigInt rest = n;
    for (BigInt round = 0; round < k && rest != 1; ++round) {
        const BigInt common = boost::multiprecision::gcd(rest, g);
        if (common == 1)
            break;
        rest /= common;
    }
    return rest == 1;
}

namespace {

// coefficient * psi(lambda(d))
BoundValue scaled_psi_of_lambda(unsigned d, const Rational& coefficient, const BoundsConfig& config) {
    const BigInt l = lambda(d);
    return evaluate_power(coefficient, l, l, config);
}

} // namespace

BoundReport c_tilde(unsigned d, const BigInt& n, const BoundsConfig& config) {
    require_rank(d, "c_tilde");
    if (n < 1)
        throw std::invalid_argument("c_tilde: degree must be >= 1");
    const Rational coefficient(boost::multiprecision::pow(n, d));
    return {"c_tilde",
            {{"d", std::to_string(d)}, {"n", n.str()}},
            scaled_psi_of_lambda(d, coefficient, config),
            "C~(d, n) = n^d psi(lambda(d)), lambda(d) = d (gamma(d) - 1)"};
}

BoundReport c_tilde_improved(unsigned d, const BigInt& n, const BoundsConfig& config) {
    require_rank(d, "c_tilde_improved");
    if (n < 1)
        throw std::invalid_argument("c_tilde_improved: degree must be >= 1");
    const Rational coefficient(boost::multiprecision::pow(n, d));
    return {"c_tilde_improved",
            {{"d", std::to_string(d)}, {"n", n.str()}},
            evaluate_power(coefficient, BigInt(d), lambda(d), config),
            "n^d gamma(d)^(lambda(d) (gamma(d) - 1))"};
}

BoundReport c_reductive(unsigned ell, const BigInt& n, unsigned r, const BoundsConfig& config) {
    require_rank(ell, "c_reductive");
    if (n < 1)
        throw std::invalid_argument("c_reductive: degree must be >= 1");
    const Rational coefficient(boost::multiprecision::pow(n, ell) * (BigInt(1) << (ell * r)));
    return {"c_reductive",
            {{"ell", std::to_string(ell)}, {"n", n.str()}, {"r", std::to_string(r)}},
            scaled_psi_of_lambda(ell, coefficient, config),
            "C(l, n, r) = 2^(l r) C~(l, n)"};
}

BoundReport t1_density_bound(unsigned d, const Rational& density, const BoundsConfig& config) {
    require_rank(d, "t1_density_bound");
    require_density(density, "t1_density_bound");
    const Rational inverse = 1 / density;
    const Rational coefficient(boost::multiprecision::pow(numerator(inverse), d),
                               boost::multiprecision::pow(denominator(inverse), d));
    return {"t1_density_bound",
            {{"d", std::to_string(d)}, {"density", to_string(density)}},
            scaled_psi_of_lambda(d, coefficient, config),
            "density^-d psi(lambda(d))"};
}

Rational dirichlet_index_bound(const BigInt& field_degree, const Rational& density) {
    if (field_degree < 1)
        throw std::invalid_argument("dirichlet_index_bound: degree must be >= 1");
    require_density(density, "dirichlet_index_bound");
    return 1 / (Rational(field_degree) * density);
}

Rational galois_index_bound(const BigInt& compositum_degree, const BigInt& class_size) {
    if (compositum_degree < 1 || class_size < 1)
        throw std::invalid_argument("galois_index_bound: degrees must be >= 1");
    return Rational(compositum_degree, class_size);
}

Rational spl0_index_bound(const Rational& density) {
    require_density(density, "spl0_index_bound");
    return 1 / density;
}

} // namespace asa
