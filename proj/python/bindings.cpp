#include "asa/arith.hpp"
#include "asa/bounds.hpp"
#include "asa/cohomology.hpp"
#include "asa/experiments.hpp"
#include "asa/progressions.hpp"
#include "asa/snf.hpp"
#include "asa/symbols.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Python ints and fractions.Fraction round-trip through decimal strings.
namespace pybind11::detail {

template <> struct type_caster<asa::BigInt> {
    PYBIND11_TYPE_CASTER(asa::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        value = asa::parse_bigint(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const asa::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

template <> struct type_caster<asa::Rational> {
    PYBIND11_TYPE_CASTER(asa::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src)
            return false;
        if (PyLong_Check(src.ptr())) {
            value = asa::Rational(asa::parse_bigint(py::str(src).cast<std::string>()));
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") &&
            py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
            value = asa::Rational(asa::parse_bigint(py::str(src.attr("numerator")).cast<std::string>()),
                                  asa::parse_bigint(py::str(src.attr("denominator")).cast<std::string>()));
            return true;
        }
        return false;
    }

    static handle cast(const asa::Rational& q, return_value_policy, handle) {
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(boost::multiprecision::numerator(q).str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(boost::multiprecision::denominator(q).str().c_str(), nullptr, 10));
        return py::module_::import("fractions").attr("Fraction")(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<asa::BigInt>>;

asa::IntegerMatrix to_matrix(const Rows& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    asa::IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Rows to_rows(const asa::IntegerMatrix& m) {
    Rows rows(m.rows(), std::vector<asa::BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
    return rows;
}

asa::Place to_place(const py::object& v) {
    if (v.is_none())
        return asa::Place::infinite();
    if (py::isinstance<py::str>(v)) {
        const auto s = v.cast<std::string>();
        if (s == "inf" || s == "infinity")
            return asa::Place::infinite();
        return asa::Place::finite(asa::parse_bigint(s));
    }
    return asa::Place::finite(v.cast<asa::BigInt>());
}

// Bound reports become either a Python int / Fraction or a dict describing the size.
py::object bound_value(const asa::BoundReport& r) {
    if (const auto* v = std::get_if<asa::BigInt>(&r.value))
        return py::cast(*v);
    if (const auto* q = std::get_if<asa::Rational>(&r.value))
        return py::cast(*q);
    const auto& s = std::get<asa::SizeReport>(r.value);
    py::dict d;
    d["digit_count"] = s.digit_count ? py::cast(*s.digit_count) : py::none();
    d["log10_value"] = s.log10_value;
    d["log10_log10_value"] = s.log10_log10_value;
    return d;
}

asa::BoundsConfig config_for(std::uint64_t digit_cap) {
    asa::BoundsConfig c;
    c.digit_cap = digit_cap;
    return c;
}

constexpr std::uint64_t kCap = asa::BoundsConfig::kDefaultDigitCap;

} // namespace

PYBIND11_MODULE(_asa, m) {
    m.doc() = "Exact number theory for strong approximation experiments on tori.";

    // arithmetic
    m.def("is_prime", py::overload_cast<const asa::BigInt&>(&asa::is_prime), py::arg("n"));
    m.def("factor", [](const asa::BigInt& n) {
        std::vector<std::pair<asa::BigInt, unsigned>> out;
        for (const auto& f : asa::factor(n).factors)
            out.emplace_back(f.prime, f.exponent);
        return out;
    }, py::arg("n"));
    m.def("crt", [](const std::vector<std::pair<asa::BigInt, asa::BigInt>>& pairs) {
        std::vector<asa::Congruence> cs;
        for (const auto& [r, mod] : pairs)
            cs.push_back({r, mod});
        const auto sol = asa::crt_solve(cs);
        return std::make_pair(sol.residue, sol.modulus);
    }, py::arg("congruences"), "Solve x = r_i mod m_i; returns (residue, modulus).");
    m.def("next_prime_in_progression", &asa::next_prime_in_progression, py::arg("a"), py::arg("m"),
          py::arg("lower"));

    // symbols
    m.def("legendre", &asa::legendre, py::arg("a"), py::arg("p"));
    m.def("jacobi", &asa::jacobi, py::arg("a"), py::arg("n"));
    m.def("hilbert_symbol", [](const asa::Rational& a, const asa::Rational& b, const py::object& place) {
        return asa::hilbert_symbol(a, b, to_place(place));
    }, py::arg("a"), py::arg("b"), py::arg("place") = py::none(),
       "Local Hilbert symbol; place is a prime, 'inf' or None for the real place.");
    m.def("is_square_in_qv", [](const asa::Rational& a, const py::object& place) {
        return asa::is_square_in_qv(a, to_place(place));
    }, py::arg("a"), py::arg("place") = py::none());
    m.def("hilbert_product", [](const asa::Rational& a, const asa::Rational& b) {
        const auto report = asa::hilbert_product_check(a, b);
        std::vector<std::pair<std::string, int>> factors;
        for (const auto& f : report.factors)
            factors.emplace_back(f.place.to_string(), f.value);
        return std::make_pair(factors, report.product);
    }, py::arg("a"), py::arg("b"), "Returns ([(place, symbol), ...], product) over infinity, 2 and the odd primes dividing a or b.");

    // bounds
    m.def("gamma", &asa::gamma, py::arg("d"));
    m.def("lambda_", &asa::lambda, py::arg("d"));
    m.def("psi", [](unsigned d, std::uint64_t cap) { return bound_value(asa::psi(d, config_for(cap))); },
          py::arg("d"), py::arg("digit_cap") = kCap);
    m.def("c_tilde", [](unsigned d, const asa::BigInt& n, std::uint64_t cap) {
        return bound_value(asa::c_tilde(d, n, config_for(cap)));
    }, py::arg("d"), py::arg("n"), py::arg("digit_cap") = kCap);
    m.def("c_tilde_improved", [](unsigned d, const asa::BigInt& n, std::uint64_t cap) {
        return bound_value(asa::c_tilde_improved(d, n, config_for(cap)));
    }, py::arg("d"), py::arg("n"), py::arg("digit_cap") = kCap);
    m.def("c_reductive", [](unsigned ell, const asa::BigInt& n, unsigned r, std::uint64_t cap) {
        return bound_value(asa::c_reductive(ell, n, r, config_for(cap)));
    }, py::arg("ell"), py::arg("n"), py::arg("r"), py::arg("digit_cap") = kCap);
    m.def("divides_psi", &asa::divides_psi, py::arg("d"), py::arg("n"));

    // progressions
    py::class_<asa::AbelianExtension>(m, "AbelianExtension")
        .def(py::init<std::uint64_t, std::vector<std::uint64_t>>(), py::arg("conductor"), py::arg("subgroup"))
        .def_static("rationals", &asa::AbelianExtension::rationals)
        .def_static("cyclotomic", &asa::AbelianExtension::cyclotomic, py::arg("m"))
        .def_static("quadratic", &asa::AbelianExtension::quadratic, py::arg("d"))
        .def_property_readonly("conductor", &asa::AbelianExtension::conductor)
        .def_property_readonly("subgroup", &asa::AbelianExtension::subgroup)
        .def_property_readonly("degree", &asa::AbelianExtension::degree)
        .def("contains", &asa::AbelianExtension::contains)
        .def("coset_label", &asa::AbelianExtension::coset_label)
        .def("__repr__", &asa::AbelianExtension::to_string);

    py::class_<asa::ProgressionSpec>(m, "ProgressionSpec")
        .def(py::init<asa::AbelianExtension, std::uint64_t>(), py::arg("extension"), py::arg("class_label"))
        .def_static("arithmetic", &asa::ProgressionSpec::arithmetic, py::arg("a"), py::arg("m"))
        .def_static("all_primes", &asa::ProgressionSpec::all_primes)
        .def_readonly("extension", &asa::ProgressionSpec::extension)
        .def_readonly("class_label", &asa::ProgressionSpec::class_label)
        .def("__repr__", &asa::ProgressionSpec::to_string);

    m.def("frobenius", [](const asa::AbelianExtension& ext, std::uint64_t p) {
        return asa::frobenius(ext, p).class_label;
    }, py::arg("extension"), py::arg("p"));
    m.def("in_progression", &asa::in_progression, py::arg("spec"), py::arg("p"));
    m.def("splits_completely", &asa::splits_completely, py::arg("extension"), py::arg("p"));
    m.def("chebotarev_density", &asa::chebotarev_density, py::arg("spec"));
    m.def("natural_density_estimate", &asa::natural_density_estimate, py::arg("spec"), py::arg("x"),
          py::call_guard<py::gil_scoped_release>());
    m.def("intersection_density", &asa::intersection_density, py::arg("spec"), py::arg("extension"));
    m.def("tractable_condition", &asa::tractable_condition, py::arg("spec"), py::arg("target"));

    // cohomology
    m.def("smith_normal_form", [](const Rows& rows) {
        const auto r = asa::smith_normal_form(to_matrix(rows), {false, false});
        return r.diagonal;
    }, py::arg("matrix"), "Diagonal of the Smith normal form.");

    py::class_<asa::FiniteGroup>(m, "FiniteGroup")
        .def(py::init<std::vector<std::vector<std::size_t>>>(), py::arg("table"))
        .def_static("cyclic", &asa::FiniteGroup::cyclic, py::arg("n"))
        .def_static("symmetric3", &asa::FiniteGroup::symmetric3)
        .def_static("direct_product", &asa::FiniteGroup::direct_product)
        .def_property_readonly("order", &asa::FiniteGroup::order)
        .def("is_cyclic", &asa::FiniteGroup::is_cyclic);

    py::class_<asa::GLattice>(m, "GLattice")
        .def(py::init([](asa::FiniteGroup g, std::size_t rank, const std::vector<Rows>& actions) {
            std::vector<asa::IntegerMatrix> ms;
            for (const auto& a : actions)
                ms.push_back(to_matrix(a));
            return asa::GLattice(std::move(g), rank, std::move(ms));
        }), py::arg("group"), py::arg("rank"), py::arg("actions"))
        .def_static("trivial", &asa::GLattice::trivial, py::arg("group"), py::arg("rank"))
        .def_property_readonly("rank", &asa::GLattice::rank)
        .def_property_readonly("actions", [](const asa::GLattice& l) {
            std::vector<Rows> out;
            for (const auto& a : l.actions())
                out.push_back(to_rows(a));
            return out;
        });

    m.def("h1", [](const asa::GLattice& lattice) { return asa::h1(lattice).divisors; }, py::arg("lattice"),
          "Invariant factors of H^1(G, A); an empty list means H^1 = 0.");
    m.def("induced_lattice", &asa::induced_lattice, py::arg("group"), py::arg("subgroup"));
    m.def("norm_one_lattice", &asa::norm_one_lattice, py::arg("group"));

    // experiments
    m.def("build_biased_prime_sets", [](std::size_t ell) {
        const auto sets = asa::build_biased_prime_sets(ell);
        return py::make_tuple(sets.p, sets.q, asa::certify(sets).passed());
    }, py::arg("ell"), "Returns (P, Q, certified).");
    m.def("density_witness", [](const std::vector<std::tuple<std::uint64_t, unsigned, asa::BigInt>>& conds) {
        std::vector<asa::LocalCondition> cs;
        for (const auto& [p, e, a] : conds)
            cs.push_back({p, e, a});
        const auto w = asa::density_witness(asa::CongruenceTarget(std::move(cs)));
        return asa::BigInt(w.sign * w.prime);
    }, py::arg("conditions"), "Signed prime eps*p lying in the basic open set given by (p, alpha, a) triples.");
    m.def("artin_kernel_failures", [](std::uint64_t q, std::uint64_t bound) {
        const auto r = asa::artin_kernel_evidence(q, bound);
        return py::make_tuple(r.samples.size(), r.failures);
    }, py::arg("q"), py::arg("bound"), "Returns (sampled primes, failures).");
    m.def("norm_one_constrained_units", [](std::int64_t height) {
        std::vector<std::pair<asa::BigInt, asa::BigInt>> out;
        for (const auto& u : asa::norm_one_constrained_units(height))
            out.emplace_back(u.re, u.im);
        return out;
    }, py::arg("height"), "Gaussian integers as (re, im) pairs.");
    m.def("local_power_index", &asa::local_power_index, py::arg("p"), py::arg("n"));
    m.def("section7_product", [](std::uint64_t n, std::size_t ell, const std::vector<std::uint64_t>& primes) {
        const auto r = asa::section7_index_bound(n, ell, primes);
        return py::make_tuple(r.product, r.expected, r.passed());
    }, py::arg("n"), py::arg("ell"), py::arg("primes"), "Returns (product, n^ell, certified).");
}
