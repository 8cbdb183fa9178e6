#include "lrw/lierinehart.hpp"

#include <utility>

namespace lrw {

namespace {

RatVector concat(std::span<const Rational> a, std::span<const Rational> b) {
    RatVector out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

LieRinehartPair::LieRinehartPair(StructureAlgebra a, StructureAlgebra l, std::vector<LinearMap> anchor)
    : a_(std::move(a)), l_(std::move(l)), anchor_(std::move(anchor)),
      action_(a_.dim() * l_.dim() * l_.dim()) {
    if (anchor_.size() != l_.dim()) throw DimensionError("anchor must give one map per L basis vector");
    for (const auto& m : anchor_) {
        if (m.dim() != a_.dim() || m.matrix.cols() != a_.dim()) throw DimensionError("anchor map must act on A");
    }
    for (const auto& la : l_.labels()) {
        if (a_.index_of(la)) throw std::invalid_argument("label '" + la + "' used in both A and L");
    }
}

std::vector<std::string> LieRinehartPair::labels() const {
    std::vector<std::string> out = a_.labels();
    out.insert(out.end(), l_.labels().begin(), l_.labels().end());
    return out;
}

void LieRinehartPair::set_action(std::size_t a, std::size_t x, std::span<const Rational> value) {
    if (value.size() != dim_l()) throw DimensionError("set_action: expected L coordinates");
    for (std::size_t y = 0; y < dim_l(); ++y) action_[(a * dim_l() + x) * dim_l() + y] = value[y];
}

RatVector LieRinehartPair::act(std::span<const Rational> a, std::span<const Rational> x) const {
    if (a.size() != dim_a() || x.size() != dim_l()) throw DimensionError("act: dimension mismatch");
    RatVector out(dim_l());
    for (std::size_t i = 0; i < dim_a(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_l(); ++j) {
            if (x[j].is_zero()) continue;
            const Rational w = a[i] * x[j];
            for (std::size_t y = 0; y < dim_l(); ++y) {
                if (!action_coeff(i, j, y).is_zero()) out[y] += w * action_coeff(i, j, y);
            }
        }
    }
    return out;
}

LinearMap LieRinehartPair::rho(std::span<const Rational> x) const {
    if (x.size() != dim_l()) throw DimensionError("rho: expected L coordinates");
    RatMatrix m(dim_a(), dim_a());
    for (std::size_t j = 0; j < dim_l(); ++j) {
        if (!x[j].is_zero()) m = m + x[j] * anchor_[j].matrix;
    }
    return {m};
}

RatVector LieRinehartPair::rho(std::span<const Rational> x, std::span<const Rational> a) const {
    if (a.size() != dim_a()) throw DimensionError("rho: expected A coordinates");
    return rho(x).apply(a);
}

std::vector<PropertyReport> LieRinehartPair::validate() const {
    std::vector<PropertyReport> out;
    out.push_back(check_property(a_, Property::associative));
    out.push_back(check_property(a_, Property::commutative));
    out.push_back(check_property(l_, Property::anticommutative));
    out.push_back(check_property(l_, Property::jacobi));
    PropertyReport anchors = PropertyReport::pass("anchor_derivation");
    for (std::size_t x = 0; x < dim_l() && anchors.holds; ++x) {
        if (!is_derivation(a_, anchor_[x])) anchors = PropertyReport::fail("anchor_derivation", {x}, l_.labels());
    }
    out.push_back(std::move(anchors));
    return out;
}

// ---------------------------------------------------------------------------

AxiomReport check_lr_axioms(const LieRinehartPair& p) {
    const std::size_t na = p.dim_a();
    const std::size_t nl = p.dim_l();
    const auto labels = p.labels();
    auto ea = [na](std::size_t i) { return unit_vector(na, i); };
    auto ex = [nl](std::size_t i) { return unit_vector(nl, i); };

    AxiomReport report{PropertyReport::pass("leibniz"), PropertyReport::pass("module_compat"),
                       PropertyReport::pass("anchor_morphism")};

    // (X, a, Y): [X, aY] = rho(X)(a) Y + a [X, Y]
    for (std::size_t x = 0; x < nl && report.leibniz.holds; ++x) {
        for (std::size_t a = 0; a < na && report.leibniz.holds; ++a) {
            for (std::size_t y = 0; y < nl; ++y) {
                RatVector lhs = p.bracket(ex(x), p.act(ea(a), ex(y)));
                axpy(lhs, -1, p.act(p.rho(ex(x), ea(a)), ex(y)));
                axpy(lhs, -1, p.act(ea(a), p.bracket(ex(x), ex(y))));
                if (!is_zero(lhs)) {
                    report.leibniz = PropertyReport::fail("leibniz", {na + x, a, na + y}, labels);
                    break;
                }
            }
        }
    }
    // (a, X, b): rho(aX)(b) = a rho(X)(b)
    for (std::size_t a = 0; a < na && report.module_compat.holds; ++a) {
        for (std::size_t x = 0; x < nl && report.module_compat.holds; ++x) {
            for (std::size_t b = 0; b < na; ++b) {
                RatVector lhs = p.rho(p.act(ea(a), ex(x)), ea(b));
                axpy(lhs, -1, p.mul(ea(a), p.rho(ex(x), ea(b))));
                if (!is_zero(lhs)) {
                    report.module_compat = PropertyReport::fail("module_compat", {a, na + x, b}, labels);
                    break;
                }
            }
        }
    }
    // (X, Y): rho([X, Y]) = [rho(X), rho(Y)]
    for (std::size_t x = 0; x < nl && report.anchor_morphism.holds; ++x) {
        for (std::size_t y = 0; y < nl; ++y) {
            const LinearMap lhs = p.rho(p.bracket(ex(x), ex(y)));
            if (lhs != commutator(p.anchor()[x], p.anchor()[y])) {
                report.anchor_morphism = PropertyReport::fail("anchor_morphism", {na + x, na + y}, labels);
                break;
            }
        }
    }
    return report;
}

bool is_faithful(const LieRinehartPair& p) {
    std::vector<RatVector> flats;
    for (const auto& m : p.anchor()) flats.push_back(m.flat());
    const std::size_t ambient = p.dim_a() * p.dim_a();
    return Subspace::span(ambient, flats).dim() == p.dim_l();
}

bool faithful_lemma_check(const LieRinehartPair& p) {
    if (!is_faithful(p)) throw PreconditionError("faithful_lemma_check: anchor is not injective");
    const AxiomReport axioms = check_lr_axioms(p);
    if (!axioms.module_compat) {
        throw PreconditionError("faithful_lemma_check: module compatibility fails at " +
                                witness_string(axioms.module_compat));
    }
    return axioms.leibniz.holds;
}

namespace {

PropertyReport closure_report(const StructureAlgebra& a, const Subspace& lsub,
                              const std::vector<std::string>& l_labels) {
    const std::size_t n = a.dim();
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), l_labels.begin(), l_labels.end());
    for (std::size_t i = 0; i < n; ++i) {
        const RatMatrix left = a.left_multiplication(i);
        for (std::size_t x = 0; x < lsub.dim(); ++x) {
            const RatMatrix ax = left * LinearMap::from_flat(n, lsub.basis()[x]).matrix;
            if (!lsub.contains(ax.entries())) return PropertyReport::fail("module_closure", {i, n + x}, labels);
        }
    }
    return PropertyReport::pass("module_closure");
}

std::vector<std::string> default_labels(std::size_t k, const std::string& prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

}  // namespace

LieRinehartPair restrict_lie_rinehart(const StructureAlgebra& a, const Subspace& lsub,
                                      std::vector<std::string> l_labels) {
    const std::size_t n = a.dim();
    if (lsub.ambient_dim() != n * n) throw DimensionError("restrict_lie_rinehart: subspace must live in Q^(n*n)");
    if (l_labels.size() != lsub.dim()) throw DimensionError("restrict_lie_rinehart: label count mismatch");
    std::vector<LinearMap> anchor;
    for (std::size_t x = 0; x < lsub.dim(); ++x) {
        anchor.push_back(LinearMap::from_flat(n, lsub.basis()[x]));
        if (!is_derivation(a, anchor.back())) {
            throw ConstructionError("restrict_lie_rinehart: basis map is not a derivation", {l_labels[x]});
        }
    }
    StructureAlgebra l(l_labels);
    try {
        l = commutator_algebra(n, lsub, l_labels);
    } catch (const std::invalid_argument& e) {
        throw ConstructionError(e.what(), {});
    }
    const PropertyReport closure = closure_report(a, lsub, l_labels);
    if (!closure) {
        throw ConstructionError("action not closed in L: " + witness_string(closure), closure.witness_labels);
    }
    LieRinehartPair pair(a, std::move(l), anchor);
    for (std::size_t i = 0; i < n; ++i) {
        const RatMatrix left = a.left_multiplication(i);
        for (std::size_t x = 0; x < lsub.dim(); ++x) {
            const RatMatrix ax = left * anchor[x].matrix;
            pair.set_action(i, x, *lsub.coordinates(ax.entries()));
        }
    }
    return pair;
}

LieRinehartPair change_l_basis(const LieRinehartPair& p, const RatMatrix& basis, std::vector<std::string> labels) {
    const std::size_t na = p.dim_a();
    const std::size_t nl = p.dim_l();
    if (basis.rows() != nl || basis.cols() != nl) throw DimensionError("change_l_basis: basis must be dim L x dim L");
    const RatMatrix inv = inverse(basis);
    std::vector<LinearMap> anchor;
    for (std::size_t x = 0; x < nl; ++x) anchor.push_back(p.rho(basis.column(x)));
    LieRinehartPair out(p.A(), p.L().change_basis(basis, std::move(labels)), std::move(anchor));
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < nl; ++x) out.set_action(a, x, inv * p.act(unit_vector(na, a), basis.column(x)));
    return out;
}

std::optional<RatVector> anchor_preimage(const LieRinehartPair& p, const LinearMap& m) {
    if (m.dim() != p.dim_a()) throw DimensionError("anchor_preimage: map does not act on A");
    std::vector<RatVector> cols;
    for (const auto& a : p.anchor()) cols.push_back(a.flat());
    return solve(RatMatrix::from_columns(cols, p.dim_a() * p.dim_a()), m.flat());
}

LieRinehartPair full_lie_rinehart(const StructureAlgebra& a) {
    if (!check_property(a, Property::associative)) throw std::invalid_argument("full_lie_rinehart: A is not associative");
    if (!check_property(a, Property::commutative)) throw std::invalid_argument("full_lie_rinehart: A is not commutative");
    const DerivationAlgebra der = derivations(a);
    try {
        return restrict_lie_rinehart(a, der.space, default_labels(der.dim(), "D"));
    } catch (const ConstructionError& e) {
        // aX is a derivation whenever A is commutative.
        throw std::logic_error(std::string("full_lie_rinehart: internal error: ") + e.what());
    }
}

PropertyReport module_closure_check(const StructureAlgebra& a, const Subspace& lsub) {
    const std::size_t n = a.dim();
    if (lsub.ambient_dim() != n * n) throw DimensionError("module_closure_check: subspace must live in Q^(n*n)");
    const auto labels = default_labels(lsub.dim(), "L");
    (void)commutator_algebra(n, lsub, labels);  // throws when not a Lie subalgebra
    return closure_report(a, lsub, labels);
}

// ---------------------------------------------------------------------------

DiamondAlgebra diamond_table(const LieRinehartPair& p) {
    const AxiomReport axioms = check_lr_axioms(p);
    if (!axioms.all_ok()) throw PreconditionError("diamond_table: Lie-Rinehart axioms fail");
    const std::size_t na = p.dim_a();
    const std::size_t nl = p.dim_l();
    StructureAlgebra d(p.labels());
    const RatVector zero_a(na);
    const RatVector zero_l(nl);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) d.set_product(i, j, concat(p.A().product(i, j), zero_l));
        for (std::size_t y = 0; y < nl; ++y) d.set_product(i, na + y, concat(zero_a, p.act(unit_vector(na, i), unit_vector(nl, y))));
    }
    for (std::size_t x = 0; x < nl; ++x) {
        for (std::size_t j = 0; j < na; ++j) d.set_product(na + x, j, concat(p.anchor()[x].image(j), zero_l));
        for (std::size_t y = 0; y < nl; ++y) d.set_product(na + x, na + y, concat(zero_a, p.L().product(x, y)));
    }
    return {std::move(d), na, nl};
}

bool AssociatorProfile::all_hold() const {
    for (const auto& r : identities)
        if (!r.holds) return false;
    return true;
}

AssociatorProfile associator_profile(const LieRinehartPair& p) {
    const std::size_t na = p.dim_a();
    const std::size_t nl = p.dim_l();
    const auto labels = p.labels();
    const DiamondAlgebra d = diamond_table(p);
    auto ea = [na](std::size_t i) { return unit_vector(na, i); };
    auto ex = [nl](std::size_t i) { return unit_vector(nl, i); };
    auto a_part = [&](const RatVector& a) { return concat(a, RatVector(nl)); };
    auto l_part = [&](const RatVector& x) { return concat(RatVector(na), x); };

    // Index ranges per slot: true = A, false = L.
    using Pattern = std::array<bool, 3>;
    const std::array<Pattern, 6> patterns = {{{false, true, false},
                                              {true, false, false},
                                              {false, false, true},
                                              {false, true, true},
                                              {true, false, true},
                                              {true, true, false}}};
    const std::array<const char*, 6> names = {"assoc(X,a,Y)=a[X,Y]", "assoc(a,X,Y)=Y(a)X", "assoc(X,Y,a)=Y(X(a))",
                                              "assoc(X,a,b)=aX(b)",  "assoc(a,X,b)=0",     "assoc(a,b,X)=0"};

    auto expected = [&](std::size_t which, std::size_t u, std::size_t v, std::size_t w) -> RatVector {
        switch (which) {
            case 0: return l_part(p.act(ea(v), p.bracket(ex(u), ex(w))));
            case 1: return l_part(p.act(p.rho(ex(w), ea(u)), ex(v)));
            case 2: return a_part(p.rho(ex(v), p.rho(ex(u), ea(w))));
            case 3: return a_part(p.mul(ea(v), p.rho(ex(u), ea(w))));
            default: return RatVector(na + nl);
        }
    };

    AssociatorProfile profile{{PropertyReport::pass(names[0]), PropertyReport::pass(names[1]),
                               PropertyReport::pass(names[2]), PropertyReport::pass(names[3]),
                               PropertyReport::pass(names[4]), PropertyReport::pass(names[5])}};
    for (std::size_t which = 0; which < 6; ++which) {
        const Pattern& pat = patterns[which];
        const std::size_t n0 = pat[0] ? na : nl, n1 = pat[1] ? na : nl, n2 = pat[2] ? na : nl;
        const std::size_t o0 = pat[0] ? 0 : na, o1 = pat[1] ? 0 : na, o2 = pat[2] ? 0 : na;
        bool done = false;
        for (std::size_t u = 0; u < n0 && !done; ++u)
            for (std::size_t v = 0; v < n1 && !done; ++v)
                for (std::size_t w = 0; w < n2 && !done; ++w) {
                    RatVector lhs = associator(d.algebra, o0 + u, o1 + v, o2 + w);
                    axpy(lhs, -1, expected(which, u, v, w));
                    if (!is_zero(lhs)) {
                        profile.identities[which] = PropertyReport::fail(names[which], {o0 + u, o1 + v, o2 + w}, labels);
                        done = true;
                    }
                }
    }
    return profile;
}

StructureAlgebra psi_bracket(const LieRinehartPair& p) {
    const std::size_t na = p.dim_a();
    const std::size_t nl = p.dim_l();
    StructureAlgebra psi(p.labels());
    for (std::size_t x = 0; x < nl; ++x) {
        for (std::size_t y = 0; y < nl; ++y) psi.set_product(na + x, na + y, concat(RatVector(na), p.L().product(x, y)));
        for (std::size_t a = 0; a < na; ++a) {
            RatVector aX = p.act(unit_vector(na, a), unit_vector(nl, x));
            for (auto& c : aX) c = -c;
            RatVector v = concat(p.anchor()[x].image(a), aX);
            psi.set_product(na + x, a, v);
            for (auto& c : v) c = -c;
            psi.set_product(a, na + x, v);
        }
    }
    return psi;
}

RatVector phi(const LieRinehartPair& p, std::size_t u, std::size_t v, std::size_t w) {
    const std::size_t na = p.dim_a();
    const std::size_t nl = p.dim_l();
    const std::size_t total = na + nl;
    if (u >= total || v >= total || w >= total) throw DimensionError("phi: basis index out of range");
    const std::array<std::size_t, 3> t = {u, v, w};
    std::vector<std::size_t> a_slots, l_slots;
    for (std::size_t s = 0; s < 3; ++s) (t[s] < na ? a_slots : l_slots).push_back(s);
    if (a_slots.size() == 3 || l_slots.size() == 3) return RatVector(total);

    // Move A entries to the front keeping relative order; sign of that permutation.
    std::array<std::size_t, 3> order{};
    std::size_t pos = 0;
    for (auto s : a_slots) order[pos++] = s;
    for (auto s : l_slots) order[pos++] = s;
    int inversions = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (order[i] > order[j]) ++inversions;
    const Rational sign = inversions % 2 ? -1 : 1;

    RatVector out(total);
    if (a_slots.size() == 2) {
        // Phi(a, b, X) = b X(a) - a X(b)
        const RatVector a = unit_vector(na, t[a_slots[0]]);
        const RatVector b = unit_vector(na, t[a_slots[1]]);
        const RatVector x = unit_vector(nl, t[l_slots[0]] - na);
        RatVector val = p.mul(b, p.rho(x, a));
        axpy(val, -1, p.mul(a, p.rho(x, b)));
        for (std::size_t i = 0; i < na; ++i) out[i] = sign * val[i];
    } else {
        // Phi(a, X, Y) = a [X, Y]
        const RatVector a = unit_vector(na, t[a_slots[0]]);
        const RatVector x = unit_vector(nl, t[l_slots[0]] - na);
        const RatVector y = unit_vector(nl, t[l_slots[1]] - na);
        const RatVector val = p.act(a, p.bracket(x, y));
        for (std::size_t i = 0; i < nl; ++i) out[na + i] = sign * val[i];
    }
    return out;
}

JacobiatorReport psi_jacobiator(const LieRinehartPair& p) {
    const StructureAlgebra psi = psi_bracket(p);
    const std::size_t n = psi.dim();
    JacobiatorReport report;
    report.dim = n;
    report.values.reserve(n * n * n);
    report.equals_phi = PropertyReport::pass("jacobiator_equals_phi");
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) {
                RatVector j = psi.multiply(psi.product(u, v), e(w));
                axpy(j, 1, psi.multiply(psi.product(v, w), e(u)));
                axpy(j, 1, psi.multiply(psi.product(w, u), e(v)));
                if (!is_zero(j)) report.identically_zero = false;
                if (report.equals_phi.holds && j != phi(p, u, v, w)) {
                    report.equals_phi = PropertyReport::fail("jacobiator_equals_phi", {u, v, w}, psi.labels());
                }
                report.values.push_back(std::move(j));
            }
    return report;
}

}  // namespace lrw
