#include "asa/bounds.hpp"
#include "asa/cohomology.hpp"

#include "../support/oracles.hpp"
#include "lattice_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace asa;

namespace {

std::vector<std::filesystem::path> corpus() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(ASA_LATTICE_DIR))
        if (e.path().extension() == ".lat")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

GLattice sign_lattice() {
    return GLattice(FiniteGroup::cyclic(2), 1, {IntegerMatrix{{1}}, IntegerMatrix{{-1}}});
}

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("finite group validation") {
    CHECK(FiniteGroup::cyclic(6).is_cyclic());
    CHECK_FALSE(FiniteGroup::symmetric3().is_cyclic());
    CHECK(FiniteGroup::symmetric3().order() == 6);
    const auto klein = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(klein.order() == 4);
    CHECK_FALSE(klein.is_cyclic());
    CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).is_cyclic());
    // Not associative / no identity / not a Latin square.
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup::cyclic(49), std::invalid_argument);
    const auto s3 = FiniteGroup::symmetric3();
    for (std::size_t a = 0; a < 6; ++a)
        CHECK(s3.mul(a, s3.inverse(a)) == s3.identity());
}

TEST_CASE("lattice validation") {
    const auto c2 = FiniteGroup::cyclic(2);
    CHECK_THROWS_AS(GLattice(c2, 1, {IntegerMatrix{{1}}, IntegerMatrix{{2}}}), std::invalid_argument);
    CHECK_THROWS_AS(GLattice(c2, 1, {IntegerMatrix{{-1}}, IntegerMatrix{{-1}}}), std::invalid_argument);
    // Order-4 matrix cannot represent Z/2.
    CHECK_THROWS_AS(GLattice(c2, 2, {IntegerMatrix::identity(2), IntegerMatrix{{0, -1}, {1, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("h1 fixed examples") {
    CHECK(h1(sign_lattice()).divisors == ints({2}));
    CHECK(h1(GLattice::trivial(FiniteGroup::symmetric3(), 3)).is_trivial());
    CHECK(h1(GLattice::trivial(FiniteGroup::cyclic(5), 1)).is_trivial());
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()})
        CHECK(h1(induced_lattice(g, {g.identity()})).is_trivial());
    CHECK(h1(sign_lattice()).to_string() == "Z/2");
    CHECK(AbelianGroupInvariants{}.to_string() == "0");
}

TEST_CASE("sign lattice by direct cocycle enumeration") {
    // f(1) = 0 and f(g) = a; the cocycle rule f(g^2) = f(g) + g f(g) = a - a = 0
    // holds for every a, and coboundaries are g b - b = -2b.
    std::set<int> classes;
    for (int a = -2; a <= 2; ++a)
        classes.insert(((a % 2) + 2) % 2);
    CHECK(classes.size() == 2);
    CHECK(h1(sign_lattice()).order() == 2);
}

TEST_CASE("h1 agrees with the fixed-point oracle on the lattice corpus") {
    const auto files = corpus();
    REQUIRE(files.size() >= 10);
    for (const auto& path : files) {
        const GLattice lattice = cli::read_lattice_file(path.string());
        const auto got = h1(lattice);
        CHECK_MESSAGE(got.free_rank == 0, path.filename().string());
        CHECK_MESSAGE(got.divisors == oracle::h1_by_fixed_points(lattice), path.filename().string());
    }
}

TEST_CASE("h1 agrees with the oracle on generated lattices") {
    // Direct sums of corpus-style blocks over several groups.
    std::vector<GLattice> lattices;
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto g = FiniteGroup::cyclic(n);
        lattices.push_back(norm_one_lattice(g));
        for (std::size_t k = 1; k < n; ++k)
            if (n % k == 0) {
                std::vector<std::size_t> sub;
                for (std::size_t x = 0; x < n; x += k)
                    sub.push_back(x);
                lattices.push_back(induced_lattice(g, sub));
            }
    }
    const auto s3 = FiniteGroup::symmetric3();
    lattices.push_back(norm_one_lattice(FiniteGroup::cyclic(4)));
    lattices.push_back(induced_lattice(s3, {0, 1}));
    lattices.push_back(induced_lattice(s3, {0, 3, 4}));
    for (const auto& l : lattices)
        if (l.rank() <= 6)
            CHECK(h1(l).divisors == oracle::h1_by_fixed_points(l));
}

TEST_CASE("h1 is invariant under unimodular conjugation") {
    std::mt19937_64 rng(42);
    for (const auto& path : corpus()) {
        const GLattice lattice = cli::read_lattice_file(path.string());
        const auto want = h1(lattice);
        for (int trial = 0; trial < 3; ++trial) {
            const IntegerMatrix u = oracle::random_unimodular(lattice.rank(), rng);
            const IntegerMatrix u_inv = oracle::unimodular_inverse(u);
            REQUIRE((u * u_inv).is_identity());
            CHECK(h1(lattice.conjugated(u, u_inv)) == want);
        }
    }
}

TEST_CASE("h1 bound checks hold on the corpus") {
    for (const auto& path : corpus()) {
        const GLattice lattice = cli::read_lattice_file(path.string());
        const auto r = h1_bound_check(lattice);
        CHECK(r.divides_bound);
        CHECK(r.annihilated_by_group_order);
        CHECK(r.h1.annihilated_by(lattice.group().order()));
        // |H^1| divides psi(d) for the faithful quotient, checked without materializing psi.
        const auto q = faithful_quotient(lattice);
        if (lattice.rank() > 0)
            CHECK(divides_psi(static_cast<unsigned>(lattice.rank()), r.h1_order));
        // For d <= 2, psi(d) also materializes: check by division.
        if (lattice.rank() >= 1 && lattice.rank() <= 2)
            CHECK(psi(static_cast<unsigned>(lattice.rank())).integer() % r.h1_order == 0);
        CHECK(h1(q.lattice) == r.h1);
    }
}

TEST_CASE("induced lattices") {
    const auto c2 = FiniteGroup::cyclic(2);
    const auto whole = induced_lattice(c2, {0, 1});
    CHECK(whole.rank() == 1);
    CHECK(whole.action(1) == IntegerMatrix{{1}});
    const auto regular = induced_lattice(c2, {0});
    CHECK(regular.rank() == 2);
    CHECK(regular.action(1) == IntegerMatrix{{0, 1}, {1, 0}});
    const auto s3 = FiniteGroup::symmetric3();
    const auto perm = induced_lattice(s3, {0, 1});
    CHECK(perm.rank() == 3);
    CHECK(h1(perm).is_trivial());
    CHECK_THROWS_AS(induced_lattice(s3, {0, 3}), std::invalid_argument);
}

TEST_CASE("norm-one lattices") {
    CHECK(norm_one_lattice(FiniteGroup::cyclic(1)).rank() == 0);
    CHECK(h1(norm_one_lattice(FiniteGroup::cyclic(1))).is_trivial());
    const auto two = norm_one_lattice(FiniteGroup::cyclic(2));
    CHECK(two.rank() == 1);
    CHECK(two.action(1) == IntegerMatrix{{-1}});
    CHECK(h1(norm_one_lattice(FiniteGroup::cyclic(3))).divisors == ints({3}));
    CHECK(norm_one_lattice(FiniteGroup::cyclic(3)).rank() == 2);
    for (std::size_t n = 2; n <= 8; ++n)
        CHECK(h1(norm_one_lattice(FiniteGroup::cyclic(n))).divisors == ints({static_cast<int>(n)}));
    CHECK_THROWS_AS(norm_one_lattice(FiniteGroup::symmetric3()), std::invalid_argument);
}

TEST_CASE("faithful quotient") {
    // Z/4 acting through Z/2 by sign.
    const auto c4 = FiniteGroup::cyclic(4);
    const GLattice through(c4, 1, {IntegerMatrix{{1}}, IntegerMatrix{{-1}}, IntegerMatrix{{1}}, IntegerMatrix{{-1}}});
    const auto q = faithful_quotient(through);
    CHECK(q.group.order() == 2);
    CHECK(q.kernel.size() == 2);
    CHECK(h1(q.lattice).divisors == ints({2}));
    CHECK(h1(through).divisors == ints({2}));

    const auto faithful = faithful_quotient(sign_lattice());
    CHECK(faithful.group.order() == 2);
    CHECK(faithful_quotient(GLattice::trivial(FiniteGroup::symmetric3(), 2)).group.order() == 1);
}

TEST_CASE("minkowski check") {
    const auto id = minkowski_check(IntegerMatrix::identity(2), 2);
    CHECK(id.order == 1);
    CHECK(id.order_divides_gamma);
    const auto r4 = minkowski_check(IntegerMatrix{{0, -1}, {1, 0}}, 2);
    CHECK(r4.order == 4);
    CHECK(r4.gamma == 48);
    CHECK(r4.passed());
    const auto r3 = minkowski_check(IntegerMatrix{{0, -1}, {1, -1}}, 2);
    CHECK(r3.order == 3);
    CHECK(r3.passed());
    const auto r6 = minkowski_check(IntegerMatrix{{0, -1}, {1, 1}}, 2);
    CHECK(r6.order == 6);
    CHECK(r6.passed());
    CHECK_THROWS_AS(minkowski_check(IntegerMatrix{{1, 1}, {0, 1}}, 2), std::domain_error);
    CHECK_THROWS_AS(minkowski_check(IntegerMatrix{{1, 1}, {0, 1}}, 3), std::invalid_argument);
}

TEST_CASE("lattice file parsing") {
    std::istringstream ok("# sign\n2\n0 1\n1 0\n1\n1\n-1\n");
    CHECK(h1(cli::read_lattice(ok)).divisors == ints({2}));
    std::istringstream truncated("2\n0 1\n1 0\n1\n1\n");
    CHECK_THROWS_AS(cli::read_lattice(truncated), cli::LatticeFormatError);
    std::istringstream junk("2\n0 1\n1 x\n1\n1\n-1\n");
    CHECK_THROWS_AS(cli::read_lattice(junk), cli::LatticeFormatError);
    std::istringstream not_hom("2\n0 1\n1 0\n1\n1\n2\n");
    CHECK_THROWS_AS(cli::read_lattice(not_hom), cli::LatticeFormatError);
    std::istringstream trailing("2\n0 1\n1 0\n1\n1\n-1\n7\n");
    CHECK_THROWS_AS(cli::read_lattice(trailing), cli::LatticeFormatError);

    const GLattice l = cli::read_lattice_file(std::string(ASA_LATTICE_DIR) + "/s3_root_lattice.lat");
    std::ostringstream out;
    cli::write_lattice(out, l);
    std::istringstream back(out.str());
    const GLattice again = cli::read_lattice(back);
    CHECK(again.actions() == l.actions());
}
