#include "lrw/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lrw {

namespace {

void require_length(const StructureAlgebra& a, std::span<const Rational> v, const char* what) {
    if (v.size() != a.dim()) {
        std::ostringstream msg;
        msg << what << ": expected a vector of length " << a.dim() << ", got " << v.size();
        throw DimensionError(msg.str());
    }
}

}  // namespace

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), tensor_(labels_.size() * labels_.size() * labels_.size()) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("basis labels must be pairwise distinct");
}

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<Rational> tensor)
    : StructureAlgebra(std::move(labels)) {
    if (tensor.size() != tensor_.size()) throw DimensionError("structure tensor must have n^3 entries");
    tensor_ = std::move(tensor);
}

std::optional<std::size_t> StructureAlgebra::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void StructureAlgebra::set_product(std::size_t i, std::size_t j, std::span<const Rational> value) {
    require_length(*this, value, "set_product");
    for (std::size_t k = 0; k < dim(); ++k) set_coeff(i, j, k, value[k]);
}

RatVector StructureAlgebra::product(std::size_t i, std::size_t j) const {
    const auto first = tensor_.begin() + static_cast<std::ptrdiff_t>((i * dim() + j) * dim());
    return {first, first + static_cast<std::ptrdiff_t>(dim())};
}

RatVector StructureAlgebra::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
    require_length(*this, x, "multiply");
    require_length(*this, y, "multiply");
    const std::size_t n = dim();
    RatVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Rational w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (!coeff(i, j, k).is_zero()) out[k] += w * coeff(i, j, k);
            }
        }
    }
    return out;
}

RatMatrix StructureAlgebra::left_multiplication(std::size_t i) const {
    RatMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) m(k, j) = coeff(i, j, k);
    return m;
}

RatMatrix StructureAlgebra::left_multiplication(std::span<const Rational> x) const {
    require_length(*this, x, "left_multiplication");
    RatMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!x[i].is_zero()) m = m + x[i] * left_multiplication(i);
    }
    return m;
}

StructureAlgebra StructureAlgebra::change_basis(const RatMatrix& new_basis, std::vector<std::string> new_labels) const {
    const std::size_t n = dim();
    if (new_basis.rows() != n || new_basis.cols() != n || new_labels.size() != n) {
        throw DimensionError("change_basis: basis matrix must be n x n with n labels");
    }
    const RatMatrix inv = inverse(new_basis);
    StructureAlgebra out(std::move(new_labels));
    for (std::size_t i = 0; i < n; ++i) {
        const RatVector u = new_basis.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            out.set_product(i, j, inv * multiply(u, new_basis.column(j)));
        }
    }
    return out;
}

StructureAlgebra StructureAlgebra::reordered(const std::vector<std::string>& order) const {
    if (order.size() != dim()) throw DimensionError("reordered: label count mismatch");
    RatMatrix perm(dim(), dim());
    for (std::size_t c = 0; c < order.size(); ++c) {
        auto idx = index_of(order[c]);
        if (!idx) throw std::invalid_argument("reordered: unknown label '" + order[c] + "'");
        perm(*idx, c) = 1;
    }
    return change_basis(perm, order);
}

// ---------------------------------------------------------------------------

LinearMap LinearMap::from_flat(std::size_t n, std::span<const Rational> flat) {
    if (flat.size() != n * n) throw DimensionError("LinearMap::from_flat: expected n*n entries");
    return {RatMatrix(n, n, std::vector<Rational>(flat.begin(), flat.end()))};
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
    return {a.matrix * b.matrix - b.matrix * a.matrix};
}

std::string_view to_string(Property p) {
    switch (p) {
        case Property::associative: return "associative";
        case Property::commutative: return "commutative";
        case Property::anticommutative: return "anticommutative";
        case Property::jacobi: return "jacobi";
        case Property::left_leibniz: return "left_leibniz";
    }
    return "?";
}

std::optional<Property> property_from_string(std::string_view name) {
    for (auto p : {Property::associative, Property::commutative, Property::anticommutative, Property::jacobi,
                   Property::left_leibniz}) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

PropertyReport PropertyReport::fail(std::string name, std::vector<std::size_t> w,
                                   const std::vector<std::string>& labels) {
    std::vector<std::string> names;
    for (auto i : w) names.push_back(labels.at(i));
    return {std::move(name), false, std::move(w), std::move(names)};
}

std::string witness_string(const PropertyReport& report) {
    if (!report.witness) return "";
    std::string out = "(";
    for (std::size_t i = 0; i < report.witness_labels.size(); ++i) {
        if (i) out += ", ";
        out += report.witness_labels[i];
    }
    return out + ")";
}

RatVector associator(const StructureAlgebra& a, std::span<const Rational> x, std::span<const Rational> y,
                     std::span<const Rational> z) {
    RatVector left = a.multiply(x, a.multiply(y, z));
    return axpy(left, -1, a.multiply(a.multiply(x, y), z));
}

RatVector associator(const StructureAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = a.dim();
    return associator(a, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
}

PropertyReport check_property(const StructureAlgebra& a, Property p) {
    const std::string name(to_string(p));
    const std::size_t n = a.dim();
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    switch (p) {
        case Property::commutative:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a.product(i, j) != a.product(j, i)) return PropertyReport::fail(name, {i, j}, a.labels());
            return PropertyReport::pass(name);
        case Property::anticommutative:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    RatVector s = a.product(i, j);
                    if (!is_zero(axpy(s, 1, a.product(j, i)))) return PropertyReport::fail(name, {i, j}, a.labels());
                }
            return PropertyReport::pass(name);
        case Property::associative:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (!is_zero(associator(a, i, j, k))) return PropertyReport::fail(name, {i, j, k}, a.labels());
            return PropertyReport::pass(name);
        case Property::jacobi:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        RatVector s = a.multiply(e(i), a.product(j, k));
                        axpy(s, 1, a.multiply(e(j), a.product(k, i)));
                        axpy(s, 1, a.multiply(e(k), a.product(i, j)));
                        if (!is_zero(s)) return PropertyReport::fail(name, {i, j, k}, a.labels());
                    }
            return PropertyReport::pass(name);
        case Property::left_leibniz:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        RatVector s = a.multiply(e(i), a.product(j, k));
                        axpy(s, -1, a.multiply(a.product(i, j), e(k)));
                        axpy(s, -1, a.multiply(e(j), a.product(i, k)));
                        if (!is_zero(s)) return PropertyReport::fail(name, {i, j, k}, a.labels());
                    }
            return PropertyReport::pass(name);
    }
    return PropertyReport::pass(name);
}

// ---------------------------------------------------------------------------

RatMatrix derivation_system(const StructureAlgebra& a) {
    const std::size_t n = a.dim();
    const bool commutative = check_property(a, Property::commutative).holds;
    // Unknown D(r, s) sits at r*n + s. Row for pair (i, j) and output l:
    //   sum_k c_ij^k D(l,k) - sum_b D(b,i) c_bj^l - sum_b D(b,j) c_ib^l = 0.
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = commutative ? i : 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) {
                RatVector row(n * n);
                for (std::size_t k = 0; k < n; ++k) row[l * n + k] += a.coeff(i, j, k);
                for (std::size_t b = 0; b < n; ++b) {
                    row[b * n + i] -= a.coeff(b, j, l);
                    row[b * n + j] -= a.coeff(i, b, l);
                }
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    return RatMatrix::from_rows(rows, n * n);
}

std::optional<RatVector> DerivationAlgebra::coordinates(const LinearMap& m) const {
    if (m.dim() != parent.dim()) throw DimensionError("DerivationAlgebra::coordinates: dimension mismatch");
    return space.coordinates(m.flat());
}

StructureAlgebra commutator_algebra(std::size_t n, const Subspace& maps, std::vector<std::string> labels) {
    if (maps.ambient_dim() != n * n) throw DimensionError("commutator_algebra: ambient dimension must be n*n");
    StructureAlgebra out(std::move(labels));
    if (out.dim() != maps.dim()) throw DimensionError("commutator_algebra: label count mismatch");
    std::vector<LinearMap> gens;
    for (const auto& v : maps.basis()) gens.push_back(LinearMap::from_flat(n, v));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            auto coords = maps.coordinates(commutator(gens[i], gens[j]).flat());
            if (!coords) {
                throw std::invalid_argument("subspace not closed under commutator: [" + out.label(i) + ", " +
                                            out.label(j) + "]");
            }
            out.set_product(i, j, *coords);
        }
    }
    return out;
}

DerivationAlgebra derivations(const StructureAlgebra& a) {
    const std::size_t n = a.dim();
    const RatMatrix system = derivation_system(a);
    Subspace space = nullspace(system);
    std::vector<LinearMap> gens;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < space.dim(); ++k) {
        gens.push_back(LinearMap::from_flat(n, space.basis()[k]));
        labels.push_back("D" + std::to_string(k + 1));
    }
    StructureAlgebra bracket = commutator_algebra(n, space, std::move(labels));
    return {a, std::move(space), std::move(gens), std::move(bracket)};
}

PropertyReport is_derivation(const StructureAlgebra& a, const LinearMap& m) {
    const std::size_t n = a.dim();
    if (m.dim() != n || m.matrix.cols() != n) throw DimensionError("is_derivation: map does not match algebra");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RatVector lhs = m.apply(a.product(i, j));
            axpy(lhs, -1, a.multiply(m.image(i), unit_vector(n, j)));
            axpy(lhs, -1, a.multiply(unit_vector(n, i), m.image(j)));
            if (!is_zero(lhs)) return PropertyReport::fail("derivation", {i, j}, a.labels());
        }
    }
    return PropertyReport::pass("derivation");
}

Subspace lie_center(const StructureAlgebra& lie) {
    const auto anti = check_property(lie, Property::anticommutative);
    if (!anti) {
        throw std::invalid_argument("lie_center: bracket is not anticommutative, witness " +
                                    witness_string(anti));
    }
    const std::size_t n = lie.dim();
    // Row (j, k): sum_i x_i c_ij^k = 0.
    RatMatrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = lie.coeff(i, j, k);
    return nullspace(m);
}

}  // namespace lrw
