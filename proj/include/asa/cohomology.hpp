#pragma once

#include "asa/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace asa {

/// Finite group given by its multiplication table. Element 0 need not be the
/// identity; the identity is located during validation.
class FiniteGroup {
public:
    static constexpr std::size_t kMaxOrder = 48;

    /// Throws std::invalid_argument unless the table defines a group of order <= 48.
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

    static FiniteGroup cyclic(std::size_t n);
    /// S3 with elements ordered as permutations of {0,1,2} in lexicographic order.
    static FiniteGroup symmetric3();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t element_order(std::size_t a) const;
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    bool is_subgroup(const std::vector<std::size_t>& elements) const;
    bool is_cyclic() const;
    /// Smallest-index element of full order; throws if the group is not cyclic.
    std::size_t generator() const;

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

/// Z^d with a left action of a finite group: action(g) is the d x d matrix of g
/// on column vectors, with action(gh) = action(g) * action(h).
class GLattice {
public:
    /// Validates the homomorphism property and that every matrix is in GL_d(Z).
    GLattice(FiniteGroup group, std::size_t rank, std::vector<IntegerMatrix> action);

    const FiniteGroup& group() const { return group_; }
    std::size_t rank() const { return rank_; }
    const IntegerMatrix& action(std::size_t g) const { return action_[g]; }
    const std::vector<IntegerMatrix>& actions() const { return action_; }

    static GLattice trivial(FiniteGroup group, std::size_t rank);
    /// Replaces every action(g) by u^-1 action(g) u for unimodular u.
    GLattice conjugated(const IntegerMatrix& u, const IntegerMatrix& u_inverse) const;

private:
    FiniteGroup group_;
    std::size_t rank_;
    std::vector<IntegerMatrix> action_;
};

/// Finitely generated abelian group Z^free_rank + sum Z/d_i with d_1 | d_2 | ...
/// and every d_i > 1.
struct AbelianGroupInvariants {
    std::vector<BigInt> divisors;
    std::size_t free_rank = 0;

    bool is_trivial() const { return divisors.empty() && free_rank == 0; }
    /// Throws std::domain_error when free_rank > 0.
    BigInt order() const;
    bool annihilated_by(const BigInt& n) const;
    std::string to_string() const;

    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

/// Invariants of coker(columns) for an integer matrix whose columns generate a
/// sublattice of Z^rows.
AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& generators);

/// H^1(G, A) = Z^1 / B^1 computed from the cocycle relations on all pairs.
AbelianGroupInvariants h1(const GLattice& lattice);

struct H1BoundReport {
    AbelianGroupInvariants h1;
    BigInt h1_order;
    std::size_t group_order = 0;
    std::size_t rank = 0;
    BigInt bound;              // s^(r(s-1))
    bool divides_bound = false;
    bool annihilated_by_group_order = false;

    bool passed() const { return divides_bound && annihilated_by_group_order; }
};

H1BoundReport h1_bound_check(const GLattice& lattice);

/// Permutation lattice Z[G/H] with G acting by left translation on cosets.
GLattice induced_lattice(const FiniteGroup& group, const std::vector<std::size_t>& subgroup);

/// Character lattice Z[G] / Z*N of the norm-one torus for cyclic G, in the
/// basis given by the images of e_1, g e_1, ..., g^(s-2) e_1.
GLattice norm_one_lattice(const FiniteGroup& group);

struct FaithfulQuotient {
    FiniteGroup group;
    GLattice lattice;
    std::vector<std::size_t> kernel;          // elements acting trivially
    std::vector<std::size_t> projection;      // element of G -> element of quotient
};

FaithfulQuotient faithful_quotient(const GLattice& lattice);

struct MinkowskiReport {
    BigInt order;
    BigInt gamma;
    bool order_divides_gamma = false;
    bool reduction_mod3_nontrivial = false; // vacuous for the identity
    bool passed() const { return order_divides_gamma && reduction_mod3_nontrivial; }
};

/// Throws std::domain_error when the matrix has infinite order, and
/// std::invalid_argument when it is not d x d.
MinkowskiReport minkowski_check(const IntegerMatrix& m, std::size_t d);

} // namespace asa
