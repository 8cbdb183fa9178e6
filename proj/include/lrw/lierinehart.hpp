#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrw/algebra.hpp"

namespace lrw {

/// A commutative associative algebra A, a Lie algebra L, the anchor
/// rho: L -> Der(A) given per basis vector of L, and the A-module action on L.
///
/// Elements of A (+) L are coordinate vectors with the A part first.
class LieRinehartPair {
public:
    LieRinehartPair(StructureAlgebra a, StructureAlgebra l, std::vector<LinearMap> anchor);

    [[nodiscard]] const StructureAlgebra& A() const { return a_; }
    [[nodiscard]] const StructureAlgebra& L() const { return l_; }
    [[nodiscard]] std::size_t dim_a() const { return a_.dim(); }
    [[nodiscard]] std::size_t dim_l() const { return l_.dim(); }
    [[nodiscard]] const std::vector<LinearMap>& anchor() const { return anchor_; }
    /// A labels followed by L labels.
    [[nodiscard]] std::vector<std::string> labels() const;

    /// Coefficient of L basis y in e_a * X_x.
    [[nodiscard]] const Rational& action_coeff(std::size_t a, std::size_t x, std::size_t y) const {
        return action_[(a * dim_l() + x) * dim_l() + y];
    }
    void set_action(std::size_t a, std::size_t x, std::span<const Rational> value);

    /// a X in L coordinates.
    [[nodiscard]] RatVector act(std::span<const Rational> a, std::span<const Rational> x) const;
    /// rho(X)(a) in A coordinates.
    [[nodiscard]] RatVector rho(std::span<const Rational> x, std::span<const Rational> a) const;
    [[nodiscard]] LinearMap rho(std::span<const Rational> x) const;
    [[nodiscard]] RatVector bracket(std::span<const Rational> x, std::span<const Rational> y) const {
        return l_.multiply(x, y);
    }
    [[nodiscard]] RatVector mul(std::span<const Rational> a, std::span<const Rational> b) const {
        return a_.multiply(a, b);
    }

    /// Checks the type invariants: A associative and commutative, L
    /// anticommutative with Jacobi, every anchor image a derivation of A.
    [[nodiscard]] std::vector<PropertyReport> validate() const;

    friend bool operator==(const LieRinehartPair&, const LieRinehartPair&) = default;

private:
    StructureAlgebra a_;
    StructureAlgebra l_;
    std::vector<LinearMap> anchor_;
    std::vector<Rational> action_;
};

struct AxiomReport {
    PropertyReport leibniz;          ///< [X, aY] = rho(X)(a) Y + a [X, Y]
    PropertyReport module_compat;    ///< rho(aX)(b) = a rho(X)(b)
    PropertyReport anchor_morphism;  ///< rho([X, Y]) = [rho(X), rho(Y)]

    [[nodiscard]] bool all_ok() const { return leibniz.holds && module_compat.holds && anchor_morphism.holds; }
};

[[nodiscard]] AxiomReport check_lr_axioms(const LieRinehartPair& p);

/// True iff the anchor is injective.
[[nodiscard]] bool is_faithful(const LieRinehartPair& p);

/// For a faithful pair satisfying module compatibility, confirms the Leibniz
/// identity on all basis tuples. Throws PreconditionError otherwise.
[[nodiscard]] bool faithful_lemma_check(const LieRinehartPair& p);

/// Pair whose Lie part is a subspace of Der(A) (given in the n*n flattened
/// matrix coordinates) with the inclusion as anchor and the action
/// (aX)(b) = a X(b). Throws ConstructionError when the subspace is not a
/// Lie subalgebra of derivations closed under the module action.
[[nodiscard]] LieRinehartPair restrict_lie_rinehart(const StructureAlgebra& a, const Subspace& lsub,
                                                    std::vector<std::string> l_labels);

/// Same pair with L re-expressed in the basis given by the columns of
/// `basis` (old L coordinates).
[[nodiscard]] LieRinehartPair change_l_basis(const LieRinehartPair& p, const RatMatrix& basis,
                                             std::vector<std::string> labels);

/// L coordinates of some X with rho(X) = m, or nullopt when m is not in the
/// image of the anchor.
[[nodiscard]] std::optional<RatVector> anchor_preimage(const LieRinehartPair& p, const LinearMap& m);

/// The full pair L = Der(A), labels D1..Dk.
[[nodiscard]] LieRinehartPair full_lie_rinehart(const StructureAlgebra& a);

/// True iff aX stays in `lsub` for every basis a and X. Throws
/// std::invalid_argument when `lsub` is not closed under commutators.
/// Witness labels are A labels and L1..Lk for the RREF basis of `lsub`.
[[nodiscard]] PropertyReport module_closure_check(const StructureAlgebra& a, const Subspace& lsub);

/// Single multiplication on A (+) L: a.b = ab, X.Y = [X,Y], X.a = rho(X)(a), a.X = aX.
struct DiamondAlgebra {
    StructureAlgebra algebra;
    std::size_t dim_a = 0;
    std::size_t dim_l = 0;
};

/// Throws PreconditionError when the axioms fail.
[[nodiscard]] DiamondAlgebra diamond_table(const LieRinehartPair& p);

/// The six associator identities of the diamond product, in the order
/// (X,a,Y), (a,X,Y), (X,Y,a), (X,a,b), (a,X,b), (a,b,X).
struct AssociatorProfile {
    std::array<PropertyReport, 6> identities;
    [[nodiscard]] bool all_hold() const;
};

[[nodiscard]] AssociatorProfile associator_profile(const LieRinehartPair& p);

/// Antisymmetric bracket psi on A (+) L: psi(X,Y) = [X,Y], psi(a,b) = 0,
/// psi(X,a) = -psi(a,X) = X(a) - aX.
[[nodiscard]] StructureAlgebra psi_bracket(const LieRinehartPair& p);

/// Antisymmetric trilinear map Phi on basis vectors of A (+) L:
/// Phi(a,b,c) = 0, Phi(a,b,X) = bX(a) - aX(b), Phi(a,X,Y) = a[X,Y], Phi(X,Y,Z) = 0.
[[nodiscard]] RatVector phi(const LieRinehartPair& p, std::size_t u, std::size_t v, std::size_t w);

struct JacobiatorReport {
    std::size_t dim = 0;
    std::vector<RatVector> values;  ///< J_psi at (u, v, w), index (u*dim + v)*dim + w
    bool identically_zero = true;
    PropertyReport equals_phi;      ///< J_psi = Phi on every basis triple

    [[nodiscard]] const RatVector& at(std::size_t u, std::size_t v, std::size_t w) const {
        return values[(u * dim + v) * dim + w];
    }
};

[[nodiscard]] JacobiatorReport psi_jacobiator(const LieRinehartPair& p);

}  // namespace lrw
