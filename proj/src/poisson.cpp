#include "lrw/poisson.hpp"

namespace lrw {

PoissonAlgebra::PoissonAlgebra(StructureAlgebra assoc, StructureAlgebra bracket)
    : assoc_(std::move(assoc)), bracket_(std::move(bracket)) {
    if (assoc_.labels() != bracket_.labels()) throw DimensionError("product and bracket must share one basis");
}

PropertyReport check_poisson(const PoissonAlgebra& p) {
    for (auto [alg, prop] : {std::pair{&p.assoc(), Property::associative}, std::pair{&p.assoc(), Property::commutative},
                             std::pair{&p.bracket(), Property::anticommutative}, std::pair{&p.bracket(), Property::jacobi}}) {
        PropertyReport r = check_property(*alg, prop);
        if (!r) return r;
    }
    const std::size_t n = p.dim();
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                RatVector lhs = p.bracket().multiply(e(x), p.assoc().product(y, z));
                axpy(lhs, -1, p.assoc().multiply(e(y), p.bracket().product(x, z)));
                axpy(lhs, -1, p.assoc().multiply(p.bracket().product(x, y), e(z)));
                if (!is_zero(lhs)) return PropertyReport::fail("leibniz", {x, y, z}, p.labels());
            }
    return PropertyReport::pass("poisson");
}

LinearMap hamiltonian_map(const PoissonAlgebra& p, std::span<const Rational> x) {
    if (x.size() != p.dim()) throw DimensionError("hamiltonian_map: dimension mismatch");
    return {p.bracket().left_multiplication(x)};
}

namespace {

RatMatrix hamiltonian_matrix(const PoissonAlgebra& p) {
    const std::size_t n = p.dim();
    std::vector<RatVector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(hamiltonian_map(p, unit_vector(n, i)).flat());
    return RatMatrix::from_columns(cols, n * n);
}

}  // namespace

Subspace poisson_center(const PoissonAlgebra& p) { return nullspace(hamiltonian_matrix(p)); }

Subspace hamiltonian_image(const PoissonAlgebra& p) { return column_space(hamiltonian_matrix(p)); }

LieRinehartPair poisson_to_lr(const PoissonAlgebra& p) {
    const Subspace image = hamiltonian_image(p);
    if (image.dim() + poisson_center(p).dim() != p.dim()) {
        throw std::logic_error("poisson_to_lr: rank-nullity violated for the hamiltonian map");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < image.dim(); ++i) labels.push_back("H" + std::to_string(i + 1));
    return restrict_lie_rinehart(p.assoc(), image, std::move(labels));
}

}  // namespace lrw
