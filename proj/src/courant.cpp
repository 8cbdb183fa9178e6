#include "lrw/courant.hpp"

#include <sstream>

namespace lrw {

LieAlgebraData::LieAlgebraData(StructureAlgebra g, std::vector<std::string> dual_labels)
    : g_(std::move(g)), dual_(std::move(dual_labels)) {
    if (dual_.empty()) {
        for (std::size_t i = 0; i < g_.dim(); ++i) dual_.push_back("w" + std::to_string(i + 1));
    }
    if (dual_.size() != g_.dim()) throw DimensionError("one dual label per basis vector of g is required");
    for (auto prop : {Property::anticommutative, Property::jacobi}) {
        const PropertyReport r = check_property(g_, prop);
        if (!r) throw std::invalid_argument("not a Lie algebra: " + r.property + " fails at " + witness_string(r));
    }
    for (const auto& d : dual_) {
        if (g_.index_of(d)) throw std::invalid_argument("dual label '" + d + "' clashes with a basis label of g");
    }
}

std::string DualTwoForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < values.rows(); ++i) {
        for (std::size_t j = i + 1; j < values.cols(); ++j) {
            const Rational& c = values(i, j);
            if (c.is_zero()) continue;
            const Rational mag = c.sign() < 0 ? -c : c;
            if (c.sign() < 0) os << (first ? "-" : " - ");
            else if (!first) os << " + ";
            if (mag != Rational(1)) os << mag << ' ';
            os << dual_labels[i] << '^' << dual_labels[j];
            first = false;
        }
    }
    return first ? "0" : os.str();
}

DualTwoForm ce_differential(const LieAlgebraData& g, std::span<const Rational> omega) {
    const std::size_t n = g.dim();
    if (omega.size() != n) throw DimensionError("ce_differential: expected dual coordinates");
    RatMatrix values(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!omega[k].is_zero()) values(i, j) -= omega[k] * g.g().coeff(i, j, k);
    return {g.dual_labels(), std::move(values)};
}

RatVector courant_bracket(const LieAlgebraData& g, std::span<const Rational> u, std::span<const Rational> v) {
    const std::size_t n = g.dim();
    if (u.size() != 2 * n || v.size() != 2 * n) throw DimensionError("courant_bracket: expected 2n coordinates");
    const auto x1 = u.subspan(0, n);
    const auto x2 = v.subspan(0, n);
    const auto w2 = v.subspan(n, n);
    RatVector out = g.g().multiply(x1, x2);
    out.resize(2 * n);
    // (i(X1) dw2)(e_j) = dw2(X1, e_j)
    const DualTwoForm dw2 = ce_differential(g, w2);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!x1[i].is_zero()) out[n + j] += x1[i] * dw2.values(i, j);
    return out;
}

RatVector CourantAlgebra::anchor(std::span<const Rational> u) const {
    if (u.size() != 2 * n) throw DimensionError("anchor: expected 2n coordinates");
    return {u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n)};
}

CourantAlgebra courant_table(const LieAlgebraData& g) {
    const std::size_t n = g.dim();
    std::vector<std::string> labels = g.g().labels();
    labels.insert(labels.end(), g.dual_labels().begin(), g.dual_labels().end());
    StructureAlgebra table(std::move(labels));
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j)
            table.set_product(i, j, courant_bracket(g, unit_vector(2 * n, i), unit_vector(2 * n, j)));
    return {std::move(table), n};
}

CourantReport courant_checks(const LieAlgebraData& g) {
    const CourantAlgebra c = courant_table(g);
    const std::size_t n = g.dim();
    CourantReport report{check_property(c.algebra, Property::left_leibniz), check_property(c.algebra, Property::jacobi),
                         PropertyReport::pass("anchor_morphism"), false};
    for (std::size_t i = 0; i < 2 * n && report.anchor_morphism.holds; ++i) {
        for (std::size_t j = 0; j < 2 * n; ++j) {
            const RatVector ui = unit_vector(2 * n, i);
            const RatVector uj = unit_vector(2 * n, j);
            if (c.anchor(c.algebra.product(i, j)) != g.g().multiply(c.anchor(ui), c.anchor(uj))) {
                report.anchor_morphism = PropertyReport::fail("anchor_morphism", {i, j}, c.algebra.labels());
                break;
            }
        }
    }
    std::vector<RatVector> images;
    for (std::size_t i = 0; i < 2 * n; ++i) images.push_back(c.anchor(unit_vector(2 * n, i)));
    report.complete = Subspace::span(n, images).dim() == n;
    return report;
}

LieRinehartPair courant_to_lr(const LieAlgebraData& g) {
    const std::size_t n = g.dim();
    StructureAlgebra a(g.dual_labels());
    std::vector<LinearMap> anchor;
    for (std::size_t x = 0; x < n; ++x) {
        // Column b: i(e_x) dw_b expressed in the dual basis.
        RatMatrix m(n, n);
        for (std::size_t b = 0; b < n; ++b) {
            const DualTwoForm dw = ce_differential(g, unit_vector(n, b));
            for (std::size_t c = 0; c < n; ++c) m(c, b) = dw.values(x, c);
        }
        anchor.push_back({std::move(m)});
    }
    return LieRinehartPair(std::move(a), g.g(), std::move(anchor));
}

}  // namespace lrw
