#include "asa/cohomology.hpp"

#include "asa/arith.hpp"
#include "asa/bounds.hpp"
#include "asa/snf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asa {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t s = table_.size();
    if (s == 0)
        throw std::invalid_argument("group table is empty");
    if (s > kMaxOrder)
        throw std::invalid_argument("group order " + std::to_string(s) + " exceeds " +
                                    std::to_string(kMaxOrder));
    for (const auto& row : table_) {
        if (row.size() != s)
            throw std::invalid_argument("group table is not square");
        for (std::size_t v : row)
            if (v >= s)
                throw std::invalid_argument("group table entry out of range");
    }

    bool found = false;
    for (std::size_t e = 0; e < s && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < s && ok; ++x)
            ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("group table has no identity");

    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            for (std::size_t c = 0; c < s; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group table is not associative");

    inverse_.assign(s, s);
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == s)
            throw std::invalid_argument("group element " + std::to_string(a) + " has no inverse");
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<std::size_t, 3>& q) {
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t x = 0; x < 3; ++x)
                c[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(c);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order(), m = b.order();
    std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
    for (std::size_t i = 0; i < n * m; ++i)
        for (std::size_t j = 0; j < n * m; ++j)
            t[i][j] = a.mul(i / m, j / m) * m + b.mul(i % m, j % m);
    return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a))
        ++k;
    return k;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& elements) const {
    std::set<std::size_t> h(elements.begin(), elements.end());
    if (h.empty() || !h.count(identity_))
        return false;
    for (std::size_t x : h) {
        if (x >= order())
            return false;
        for (std::size_t y : h)
            if (!h.count(mul(x, inverse(y))))
                return false;
    }
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (std::size_t a = 0; a < order(); ++a)
        if (element_order(a) == order())
            return true;
    return false;
}

std::size_t FiniteGroup::generator() const {
    for (std::size_t a = 0; a < order(); ++a)
        if (element_order(a) == order())
            return a;
    throw std::invalid_argument("group is not cyclic");
}

// ---------------------------------------------------------------------------
// GLattice

GLattice::GLattice(FiniteGroup group, std::size_t rank, std::vector<IntegerMatrix> action)
    : group_(std::move(group)), rank_(rank), action_(std::move(action)) {
    const std::size_t s = group_.order();
    if (action_.size() != s)
        throw std::invalid_argument("lattice needs one action matrix per group element");
    for (std::size_t g = 0; g < s; ++g) {
        const auto& m = action_[g];
        if (m.rows() != rank_ || m.cols() != rank_)
            throw std::invalid_argument("action matrix " + std::to_string(g) + " is not " +
                                        std::to_string(rank_) + "x" + std::to_string(rank_));
        if (abs(m.determinant()) != 1)
            throw std::invalid_argument("action matrix " + std::to_string(g) + " is not unimodular");
    }
    if (!action_[group_.identity()].is_identity() && rank_ > 0)
        throw std::invalid_argument("identity element does not act trivially");
    for (std::size_t g = 0; g < s; ++g)
        for (std::size_t h = 0; h < s; ++h)
            if (action_[group_.mul(g, h)] != action_[g] * action_[h])
                throw std::invalid_argument("action is not a homomorphism at (" + std::to_string(g) +
                                            ", " + std::to_string(h) + ")");
}

GLattice GLattice::trivial(FiniteGroup group, std::size_t rank) {
    std::vector<IntegerMatrix> action(group.order(), IntegerMatrix::identity(rank));
    return GLattice(std::move(group), rank, std::move(action));
}

GLattice GLattice::conjugated(const IntegerMatrix& u, const IntegerMatrix& u_inverse) const {
    if (!(u * u_inverse).is_identity())
        throw std::invalid_argument("conjugated: matrices are not mutually inverse");
    std::vector<IntegerMatrix> action;
    action.reserve(action_.size());
    for (const auto& m : action_)
        action.push_back(u_inverse * m * u);
    return GLattice(group_, rank_, std::move(action));
}

// ---------------------------------------------------------------------------
// Abelian group invariants

BigInt AbelianGroupInvariants::order() const {
    if (free_rank > 0)
        throw std::domain_error("group is infinite (free rank " + std::to_string(free_rank) + ")");
    BigInt out = 1;
    for (const auto& d : divisors)
        out *= d;
    return out;
}

bool AbelianGroupInvariants::annihilated_by(const BigInt& n) const {
    if (free_rank > 0)
        return n == 0;
    for (const auto& d : divisors)
        if (n % d != 0)
            return false;
    return true;
}

std::string AbelianGroupInvariants::to_string() const {
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : divisors) {
        os << (first ? "" : " x ") << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        os << (first ? "" : " x ") << "Z";
        if (free_rank > 1)
            os << '^' << free_rank;
    }
    return os.str();
}

AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& generators) {
    AbelianGroupInvariants out;
    SnfResult snf = smith_normal_form(generators, {.track_left = false, .track_right = false});
    std::size_t rank = 0;
    for (const auto& d : snf.diagonal) {
        if (d == 0)
            continue;
        ++rank;
        if (d != 1)
            out.divisors.push_back(d);
    }
    out.free_rank = generators.rows() - rank;
    return out;
}

// ---------------------------------------------------------------------------
// H^1

namespace {

// Position of g among the non-identity elements.
std::vector<std::ptrdiff_t> cochain_slots(const FiniteGroup& group) {
    std::vector<std::ptrdiff_t> slot(group.order(), -1);
    std::ptrdiff_t next = 0;
    for (std::size_t g = 0; g < group.order(); ++g)
        if (g != group.identity())
            slot[g] = next++;
    return slot;
}

// Rows of f(gh) - f(g) - g.f(h) = 0 over all pairs of non-identity elements,
// with f(1) = 0 substituted. Duplicate and zero rows are dropped.
IntegerMatrix cocycle_relations(const GLattice& lattice) {
    const FiniteGroup& group = lattice.group();
    const std::size_t d = lattice.rank();
    const auto slot = cochain_slots(group);
    const std::size_t n = (group.order() - 1) * d;

    std::set<std::vector<BigInt>> seen;
    std::vector<BigInt> flat;
    std::size_t rows = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
        if (g == group.identity())
            continue;
        for (std::size_t h = 0; h < group.order(); ++h) {
            if (h == group.identity())
                continue;
            const std::size_t gh = group.mul(g, h);
            const IntegerMatrix& act = lattice.action(g);
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<BigInt> row(n);
                if (slot[gh] >= 0)
                    row[slot[gh] * d + i] += 1;
                row[slot[g] * d + i] -= 1;
                for (std::size_t j = 0; j < d; ++j)
                    row[slot[h] * d + j] -= act(i, j);
                if (std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; }))
                    continue;
                if (!seen.insert(row).second)
                    continue;
                flat.insert(flat.end(), row.begin(), row.end());
                ++rows;
            }
        }
    }
    return IntegerMatrix(rows, n, std::move(flat));
}

// Column j = coboundary of the j-th basis vector: g -> (g - 1) e_j.
IntegerMatrix coboundary_map(const GLattice& lattice) {
    const FiniteGroup& group = lattice.group();
    const std::size_t d = lattice.rank();
    const auto slot = cochain_slots(group);
    IntegerMatrix out((group.order() - 1) * d, d);
    for (std::size_t g = 0; g < group.order(); ++g) {
        if (g == group.identity())
            continue;
        const IntegerMatrix& act = lattice.action(g);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                out(slot[g] * d + i, j) = act(i, j) - (i == j ? 1 : 0);
    }
    return out;
}

} // namespace

AbelianGroupInvariants h1(const GLattice& lattice) {
    const std::size_t n = (lattice.group().order() - 1) * lattice.rank();
    if (n == 0)
        return {};

    const IntegerMatrix relations = cocycle_relations(lattice);
    const IntegerMatrix coboundaries = coboundary_map(lattice);

    IntegerMatrix basis_change = IntegerMatrix::identity(n);
    std::size_t rank = 0;
    if (relations.rows() > 0) {
        SnfResult snf = smith_normal_form(relations, {.track_left = false, .track_right = true});
        rank = snf.rank();
        basis_change = std::move(snf.right_inverse);
    }
    // Coordinates of B^1 in the Z^1 basis (last n - rank columns of right_transform).
    const IntegerMatrix coords = basis_change * coboundaries;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < coords.cols(); ++j)
            if (coords(i, j) != 0)
                throw std::logic_error("h1: coboundary is not a cocycle");

    IntegerMatrix in_kernel(n - rank, coords.cols());
    for (std::size_t i = rank; i < n; ++i)
        for (std::size_t j = 0; j < coords.cols(); ++j)
            in_kernel(i - rank, j) = coords(i, j);
    return cokernel_invariants(in_kernel);
}

H1BoundReport h1_bound_check(const GLattice& lattice) {
    H1BoundReport report;
    report.h1 = h1(lattice);
    report.group_order = lattice.group().order();
    report.rank = lattice.rank();
    const BigInt s(report.group_order);
    report.bound = boost::multiprecision::pow(
        s, static_cast<unsigned>(report.rank * (report.group_order - 1)));
    if (report.h1.free_rank == 0) {
        report.h1_order = report.h1.order();
        report.divides_bound = report.bound % report.h1_order == 0;
    }
    report.annihilated_by_group_order = report.h1.annihilated_by(s);
    return report;
}

// ---------------------------------------------------------------------------
// Constructors

GLattice induced_lattice(const FiniteGroup& group, const std::vector<std::size_t>& subgroup) {
    if (!group.is_subgroup(subgroup))
        throw std::invalid_argument("induced_lattice: elements do not form a subgroup");
    const std::size_t s = group.order();

    // coset_of[x] = index of xH, cosets numbered by smallest element
    std::vector<std::size_t> coset_of(s, s);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < s; ++x) {
        if (coset_of[x] != s)
            continue;
        for (std::size_t h : subgroup)
            coset_of[group.mul(x, h)] = reps.size();
        reps.push_back(x);
    }
    const std::size_t r = reps.size();
    std::vector<IntegerMatrix> action;
    action.reserve(s);
    for (std::size_t g = 0; g < s; ++g) {
        IntegerMatrix m(r, r);
        for (std::size_t c = 0; c < r; ++c)
            m(coset_of[group.mul(g, reps[c])], c) = 1;
        action.push_back(std::move(m));
    }
    return GLattice(group, r, std::move(action));
}

GLattice norm_one_lattice(const FiniteGroup& group) {
    if (!group.is_cyclic())
        throw std::invalid_argument("norm_one_lattice: group must be cyclic");
    const std::size_t s = group.order();
    const std::size_t r = s - 1;
    if (s == 1)
        return GLattice::trivial(group, 0);

    // generator: e_i -> e_{i+1}, e_{s-2} -> -(e_0 + ... + e_{s-2})
    IntegerMatrix gen(r, r);
    for (std::size_t i = 0; i + 1 < r; ++i)
        gen(i + 1, i) = 1;
    for (std::size_t i = 0; i < r; ++i)
        gen(i, r - 1) = -1;

    const std::size_t g = group.generator();
    std::vector<IntegerMatrix> action(s);
    IntegerMatrix power = IntegerMatrix::identity(r);
    std::size_t element = group.identity();
    for (std::size_t k = 0; k < s; ++k) {
        action[element] = power;
        power = gen * power;
        element = group.mul(g, element);
    }
    return GLattice(group, r, std::move(action));
}

FaithfulQuotient faithful_quotient(const GLattice& lattice) {
    const FiniteGroup& group = lattice.group();
    const std::size_t s = group.order();
    std::vector<std::size_t> kernel;
    for (std::size_t g = 0; g < s; ++g)
        if (lattice.action(g) == lattice.action(group.identity()))
            kernel.push_back(g);

    std::vector<std::size_t> projection(s, s);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < s; ++x) {
        if (projection[x] != s)
            continue;
        for (std::size_t k : kernel)
            projection[group.mul(x, k)] = reps.size();
        reps.push_back(x);
    }
    const std::size_t q = reps.size();
    std::vector<std::vector<std::size_t>> table(q, std::vector<std::size_t>(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            table[a][b] = projection[group.mul(reps[a], reps[b])];
    FiniteGroup quotient(std::move(table));

    std::vector<IntegerMatrix> action;
    action.reserve(q);
    for (std::size_t a = 0; a < q; ++a)
        action.push_back(lattice.action(reps[a]));
    GLattice faithful(quotient, lattice.rank(), std::move(action));
    return {std::move(quotient), std::move(faithful), std::move(kernel), std::move(projection)};
}

// ---------------------------------------------------------------------------
// Minkowski

namespace {

// Any finite-order element of GL_d(Z) has order dividing the lcm of all k
// with phi(k) <= d (its eigenvalues are roots of unity of degree <= d).
BigInt torsion_exponent(std::size_t d) {
    BigInt out = 1;
    const std::uint64_t limit = 2 * static_cast<std::uint64_t>(d) * d + 6;
    for (std::uint64_t k = 1; k <= limit; ++k)
        if (euler_phi(k) <= d)
            out = lcm(out, BigInt(k));
    return out;
}

} // namespace

MinkowskiReport minkowski_check(const IntegerMatrix& m, std::size_t d) {
    if (d == 0 || m.rows() != d || m.cols() != d)
        throw std::invalid_argument("minkowski_check: expected a " + std::to_string(d) + "x" +
                                    std::to_string(d) + " matrix");
    const BigInt exponent = torsion_exponent(d);
    if (!matrix_power(m, exponent).is_identity())
        throw std::domain_error("minkowski_check: matrix has infinite order");

    MinkowskiReport report;
    report.order = exponent;
    for (const auto& f : factor(exponent).factors)
        for (unsigned e = 0; e < f.exponent; ++e) {
            BigInt smaller = report.order / f.prime;
            if (!matrix_power(m, smaller).is_identity())
                break;
            report.order = smaller;
        }
    report.gamma = gamma(static_cast<unsigned>(d));
    report.order_divides_gamma = report.gamma % report.order == 0;

    bool reduces_to_identity = true;
    for (std::size_t i = 0; i < d && reduces_to_identity; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (mod_floor(m(i, j) - (i == j ? 1 : 0), BigInt(3)) != 0) {
                reduces_to_identity = false;
                break;
            }
    report.reduction_mod3_nontrivial = m.is_identity() || !reduces_to_identity;
    return report;
}

} // namespace asa
