#pragma once

#include <string>
#include <vector>

#include "lrw/algebra.hpp"
#include "lrw/lierinehart.hpp"

namespace lrw {

/// One space carrying a commutative associative product and a Lie bracket.
class PoissonAlgebra {
public:
    PoissonAlgebra(StructureAlgebra assoc, StructureAlgebra bracket);

    [[nodiscard]] std::size_t dim() const { return assoc_.dim(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return assoc_.labels(); }
    [[nodiscard]] const StructureAlgebra& assoc() const { return assoc_; }
    [[nodiscard]] const StructureAlgebra& bracket() const { return bracket_; }

    friend bool operator==(const PoissonAlgebra&, const PoissonAlgebra&) = default;

private:
    StructureAlgebra assoc_;
    StructureAlgebra bracket_;
};

/// Associativity, commutativity, anticommutativity, Jacobi and the Leibniz
/// rule {x, yz} = y{x,z} + {x,y}z, in that order; the report names the first
/// family that fails.
[[nodiscard]] PropertyReport check_poisson(const PoissonAlgebra& p);

/// X_x : y -> {x, y}.
[[nodiscard]] LinearMap hamiltonian_map(const PoissonAlgebra& p, std::span<const Rational> x);

/// Kernel of x -> X_x.
[[nodiscard]] Subspace poisson_center(const PoissonAlgebra& p);

/// Image of x -> X_x inside Q^(n*n).
[[nodiscard]] Subspace hamiltonian_image(const PoissonAlgebra& p);

/// The Lie-Rinehart pair (L, A) with L the hamiltonian derivations, anchor
/// the inclusion, and (y X_x)(z) = y {x, z}. L labels are H1..Hk.
/// Throws ConstructionError when the module action leaves L.
[[nodiscard]] LieRinehartPair poisson_to_lr(const PoissonAlgebra& p);

}  // namespace lrw
