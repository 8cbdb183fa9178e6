#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrw/errors.hpp"
#include "lrw/exactlin.hpp"

namespace lrw {

/// Finite-dimensional algebra given by structure constants over a labeled
/// basis: coeff(i, j, k) is the coefficient of e_k in e_i * e_j.
class StructureAlgebra {
public:
    StructureAlgebra() = default;
    /// All products zero.
    explicit StructureAlgebra(std::vector<std::string> labels);
    StructureAlgebra(std::vector<std::string> labels, std::vector<Rational> tensor);

    [[nodiscard]] std::size_t dim() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;

    [[nodiscard]] const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim() + j) * dim() + k];
    }
    void set_coeff(std::size_t i, std::size_t j, std::size_t k, Rational value) {
        tensor_[(i * dim() + j) * dim() + k] = std::move(value);
    }
    void set_product(std::size_t i, std::size_t j, std::span<const Rational> value);

    /// Coordinates of e_i * e_j.
    [[nodiscard]] RatVector product(std::size_t i, std::size_t j) const;
    [[nodiscard]] RatVector multiply(std::span<const Rational> x, std::span<const Rational> y) const;

    /// Matrix of y -> e_i * y (columns are images of basis vectors).
    [[nodiscard]] RatMatrix left_multiplication(std::size_t i) const;
    [[nodiscard]] RatMatrix left_multiplication(std::span<const Rational> x) const;

    /// Same algebra in a new basis whose vectors are the columns of
    /// `new_basis` (old coordinates). Throws if the matrix is singular.
    [[nodiscard]] StructureAlgebra change_basis(const RatMatrix& new_basis,
                                                std::vector<std::string> new_labels) const;
    /// Basis permutation given by the new label order.
    [[nodiscard]] StructureAlgebra reordered(const std::vector<std::string>& order) const;

    [[nodiscard]] const std::vector<Rational>& tensor() const { return tensor_; }
    friend bool operator==(const StructureAlgebra&, const StructureAlgebra&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Rational> tensor_;
};

/// Square matrix acting on basis coordinates; column j is the image of e_j.
struct LinearMap {
    RatMatrix matrix;

    static LinearMap zero(std::size_t n) { return {RatMatrix(n, n)}; }
    /// Row-major flattening into Q^(n*n), entry (r, c) at r*n + c.
    static LinearMap from_flat(std::size_t n, std::span<const Rational> flat);

    [[nodiscard]] std::size_t dim() const { return matrix.rows(); }
    [[nodiscard]] RatVector apply(std::span<const Rational> x) const { return matrix * x; }
    [[nodiscard]] RatVector image(std::size_t j) const { return matrix.column(j); }
    [[nodiscard]] RatVector flat() const { return matrix.entries(); }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// [A, B] = A B - B A.
[[nodiscard]] LinearMap commutator(const LinearMap& a, const LinearMap& b);

enum class Property { associative, commutative, anticommutative, jacobi, left_leibniz };

[[nodiscard]] std::string_view to_string(Property p);
[[nodiscard]] std::optional<Property> property_from_string(std::string_view name);

/// Outcome of an exhaustive identity check. The witness is the
/// lexicographically first failing tuple of basis indices.
struct PropertyReport {
    std::string property;
    bool holds = true;
    std::optional<std::vector<std::size_t>> witness;
    std::vector<std::string> witness_labels;

    static PropertyReport pass(std::string name) { return {std::move(name), true, std::nullopt, {}}; }
    /// `labels` names the basis the witness indices refer to.
    static PropertyReport fail(std::string name, std::vector<std::size_t> w, const std::vector<std::string>& labels);
    explicit operator bool() const { return holds; }
};

/// Renders the witness tuple, e.g. "(e1, e3, e3)"; empty when the check held.
[[nodiscard]] std::string witness_string(const PropertyReport& report);

[[nodiscard]] PropertyReport check_property(const StructureAlgebra& a, Property p);

/// x(yz) - (xy)z.
[[nodiscard]] RatVector associator(const StructureAlgebra& a, std::span<const Rational> x,
                                   std::span<const Rational> y, std::span<const Rational> z);

/// x(yz) - (xy)z on basis vectors.
[[nodiscard]] RatVector associator(const StructureAlgebra& a, std::size_t i, std::size_t j, std::size_t k);

/// Linear system (rows) in the n*n flattened matrix coordinates whose
/// solutions are the derivations of `a`.
[[nodiscard]] RatMatrix derivation_system(const StructureAlgebra& a);

struct DerivationAlgebra {
    StructureAlgebra parent;
    Subspace space;                ///< Der(A) inside Q^(n*n)
    std::vector<LinearMap> gens;   ///< RREF-canonical basis of `space`
    StructureAlgebra bracket;      ///< [D_i, D_j] in the gens basis, labels D1..Dk

    [[nodiscard]] std::size_t dim() const { return gens.size(); }
    /// Coordinates of a linear map in the gens basis, nullopt if not a derivation.
    [[nodiscard]] std::optional<RatVector> coordinates(const LinearMap& m) const;
};

[[nodiscard]] DerivationAlgebra derivations(const StructureAlgebra& a);

[[nodiscard]] PropertyReport is_derivation(const StructureAlgebra& a, const LinearMap& m);

/// Center { x : [x, e_j] = 0 for all j } of an anticommutative algebra.
[[nodiscard]] Subspace lie_center(const StructureAlgebra& lie);

/// Builds the Lie algebra on a subspace of maps closed under commutators.
/// Throws std::invalid_argument with the offending pair when not closed.
[[nodiscard]] StructureAlgebra commutator_algebra(std::size_t n, const Subspace& maps,
                                                  std::vector<std::string> labels);

}  // namespace lrw
