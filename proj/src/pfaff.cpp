#include "lrw/pfaff.hpp"

#include <random>

namespace lrw {

PfaffSystem::PfaffSystem(VarList v, std::vector<std::string> n, std::vector<PolyForm> f)
    : vars(std::move(v)), names(std::move(n)), forms(std::move(f)) {
    if (names.size() != forms.size()) throw DimensionError("PfaffSystem: one name per form required");
    for (const auto& form : forms) {
        if (form.degree() != 1) throw DimensionError("PfaffSystem: all forms must have degree 1");
        if (form.vars() != vars) throw DimensionError("PfaffSystem: forms over different variable lists");
    }
}

std::vector<RatVector> default_sample_points(std::size_t n) {
    std::vector<RatVector> points{RatVector(n)};
    std::mt19937 gen(20260516u);
    for (int k = 0; k < 3; ++k) {
        RatVector pt;
        for (std::size_t i = 0; i < n; ++i) {
            const long num = static_cast<long>(gen() % 11) - 5;
            const long den = static_cast<long>(gen() % 4) + 1;
            pt.emplace_back(num, den);
        }
        points.push_back(std::move(pt));
    }
    return points;
}

namespace {

void require_point(const VarList& vars, std::span<const Rational> point) {
    if (point.size() != vars.size()) throw DimensionError("point dimension does not match the variable list");
}

}  // namespace

bool is_contact_form(const PolyForm& omega, std::span<const Rational> point) {
    if (omega.degree() != 1) throw PreconditionError("is_contact_form: expected a 1-form");
    const std::size_t n = omega.nvars();
    if (n % 2 == 0) throw PreconditionError("is_contact_form: ambient dimension must be odd");
    require_point(omega.vars(), point);
    const PolyForm d_at = eval_at(ext_d(omega), point);
    PolyForm top = eval_at(omega, point);
    for (std::size_t i = 0; i < (n - 1) / 2; ++i) top = wedge(top, d_at);
    return !top.is_zero();
}

RatVector reeb_at(const PolyForm& omega, std::span<const Rational> point) {
    if (!is_contact_form(omega, point)) throw PreconditionError("reeb_at: form is not contact at the point");
    const std::size_t n = omega.nvars();
    const RatVector w = covector_of(eval_at(omega, point));
    const RatMatrix b = bilinear_of(eval_at(ext_d(omega), point));
    // Row 0: omega(R) = 1. Row 1+j: d omega(R, e_j) = 0.
    RatMatrix system(n + 1, n);
    RatVector rhs(n + 1);
    rhs[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        system(0, i) = w[i];
        for (std::size_t j = 0; j < n; ++j) system(1 + j, i) = b(i, j);
    }
    auto r = solve(system, rhs);
    if (!r) throw std::logic_error("reeb_at: inconsistent system for a contact form");
    return *r;
}

namespace {

struct Frame {
    Subspace w;                        // span of alpha_i(x)
    std::vector<std::size_t> quotient; // non-pivot coordinates
    RatMatrix projection;              // (n-p) x n, column j = class of dx_j
};

Frame quotient_frame(const PfaffSystem& system, std::span<const Rational> point) {
    require_point(system.vars, point);
    const std::size_t n = system.dim();
    std::vector<RatVector> covectors;
    for (const auto& f : system.forms) covectors.push_back(covector_of(eval_at(f, point)));
    Subspace w = Subspace::span(n, covectors);
    if (w.dim() != system.rank()) throw PreconditionError("forms are linearly dependent at the point");
    std::vector<bool> pivot(n, false);
    for (auto p : w.pivots()) pivot[p] = true;
    std::vector<std::size_t> quotient;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j]) quotient.push_back(j);
    RatMatrix proj(quotient.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector v = unit_vector(n, j);
        for (std::size_t k = 0; k < w.dim(); ++k) axpy(v, -v[w.pivots()[k]], w.basis()[k]);
        for (std::size_t q = 0; q < quotient.size(); ++q) proj(q, j) = v[quotient[q]];
    }
    return {std::move(w), std::move(quotient), std::move(proj)};
}

}  // namespace

ClassReport cartan_class_at(const PfaffSystem& system, std::span<const Rational> point) {
    const Frame frame = quotient_frame(system, point);
    ClassReport report;
    report.point.assign(point.begin(), point.end());
    report.rank = system.rank();
    report.quotient_vars = frame.quotient;
    Subspace total(frame.quotient.size());
    for (const auto& f : system.forms) {
        const RatMatrix b = bilinear_of(eval_at(ext_d(f), point));
        RatMatrix reduced = frame.projection * b * frame.projection.transpose();
        Subspace support = column_space(reduced);
        total = total + support;
        report.quotient_forms.push_back(std::move(reduced));
        report.supports.push_back(std::move(support));
    }
    report.s = total.dim();
    report.cls = report.s + report.rank;
    return report;
}

PropertyReport integrability_check(const PfaffSystem& system) {
    PolyForm all = PolyForm::scalar(system.vars, Poly::constant(system.dim(), 1));
    for (const auto& f : system.forms) all = wedge(all, f);
    for (std::size_t i = 0; i < system.rank(); ++i) {
        if (!wedge(ext_d(system.forms[i]), all).is_zero()) {
            return PropertyReport::fail("integrable", {i}, system.names);
        }
    }
    return PropertyReport::pass("integrable");
}

CharacteristicSpan characteristic_generators_at(const PfaffSystem& system, std::span<const Rational> point) {
    require_point(system.vars, point);
    const std::size_t n = system.dim();
    CharacteristicSpan out;
    for (const auto& f : system.forms) out.generators.push_back(covector_of(eval_at(f, point)));
    if (Subspace::span(n, out.generators).dim() != system.rank()) {
        throw PreconditionError("forms are linearly dependent at the point");
    }
    const Subspace fields = nullspace(RatMatrix::from_rows(out.generators, n));
    for (const auto& f : system.forms) {
        const RatMatrix b = bilinear_of(eval_at(ext_d(f), point));
        for (const auto& x : fields.basis()) {
            // Y -> d alpha(X, Y)
            out.generators.push_back(b.transpose() * x);
        }
    }
    out.dim = Subspace::span(n, out.generators).dim();
    return out;
}

PolyForm darboux_contact(std::size_t k) {
    if (k == 0) throw PreconditionError("darboux_contact: k must be at least 1");
    const std::size_t n = 2 * k + 1;
    VarList vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    PolyForm omega = PolyForm::basis(vars, {0});
    for (std::size_t j = 1; j <= k; ++j) {
        omega.add({2 * j}, Poly::variable(n, 2 * j - 1));
    }
    return omega;
}

PfaffSystem darboux_system(std::size_t p, std::size_t m) {
    if (p == 0 || m == 0) throw PreconditionError("darboux_system: p and m must be at least 1");
    const std::size_t n = p + m + p * m;
    VarList vars;
    for (std::size_t i = 1; i <= p; ++i) vars.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= m; ++j) vars.push_back("y" + std::to_string(j));
    for (std::size_t k = 1; k <= p * m; ++k) vars.push_back("z" + std::to_string(k));
    std::vector<std::string> names;
    std::vector<PolyForm> forms;
    for (std::size_t i = 1; i <= p; ++i) {
        PolyForm alpha = PolyForm::basis(vars, {i - 1});
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t z = (j - 1) * p + i;  // z_z, 1-based
            alpha.add({p + j - 1}, Poly::variable(n, p + m + z - 1));
        }
        names.push_back("a" + std::to_string(i));
        forms.push_back(std::move(alpha));
    }
    return {std::move(vars), std::move(names), std::move(forms)};
}

IntegralBound max_integral_dim(std::size_t p, std::size_t n) {
    if (p < 1 || p >= n) throw PreconditionError("max_integral_dim: requires 1 <= p < n");
    IntegralBound b;
    b.p = p;
    b.n = n;
    b.q = Rational(static_cast<long>(p * (n - p)), static_cast<long>(p + 1));
    b.integral = b.q.is_integer();
    if ((n - p) % (p + 1) == 0) b.m = (n - p) / (p + 1);
    return b;
}

std::vector<IntegralBound> contact_decompositions(std::size_t n) {
    std::vector<IntegralBound> out;
    for (std::size_t p = 1; p < n; ++p) {
        IntegralBound b = max_integral_dim(p, n);
        if (b.m && *b.m >= 1) out.push_back(std::move(b));
    }
    return out;
}

TransversalReport transversal_check(std::size_t p, std::size_t m) {
    const PfaffSystem system = darboux_system(p, m);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= p; ++i) labels.push_back("X" + std::to_string(i));
    labels.insert(labels.end(), system.names.begin(), system.names.end());
    TransversalReport report{PropertyReport::pass("duality"), PropertyReport::pass("annihilation")};
    const std::size_t n = system.dim();
    for (std::size_t i = 0; i < p; ++i) {
        const PolyVectorField x = PolyVectorField::coordinate(system.vars, i);
        for (std::size_t j = 0; j < p; ++j) {
            const PolyForm pairing = interior(x, system.forms[j]);
            const PolyForm expected = PolyForm::scalar(system.vars, Poly::constant(n, i == j ? 1 : 0));
            if (report.duality.holds && pairing != expected) {
                report.duality = PropertyReport::fail("duality", {i, p + j}, labels);
            }
            if (report.annihilation.holds && !interior(x, ext_d(system.forms[j])).is_zero()) {
                report.annihilation = PropertyReport::fail("annihilation", {i, p + j}, labels);
            }
        }
    }
    return report;
}

PolyVectorField bivector_anchor(const PolyBivector& lambda, const PolyForm& alpha) {
    if (alpha.degree() != 1) throw DimensionError("bivector_anchor: expected a 1-form");
    if (alpha.vars() != lambda.vars) throw DimensionError("bivector_anchor: variable mismatch");
    const std::size_t n = alpha.nvars();
    PolyVectorField out{alpha.vars(), std::vector<Poly>(n, Poly(n))};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.components[j] += lambda.rho(i, j) * alpha.coefficient({i});
    return out;
}

PolyForm poisson_cotangent_bracket(const PolyBivector& lambda, const PolyForm& a1, const PolyForm& a2) {
    if (a1.vars() != a2.vars() || a1.vars() != lambda.vars) {
        throw DimensionError("poisson_cotangent_bracket: variable mismatch");
    }
    if (a1.degree() != 1 || a2.degree() != 1) throw DimensionError("poisson_cotangent_bracket: expected 1-forms");
    const PolyVectorField r1 = bivector_anchor(lambda, a1);
    const PolyVectorField r2 = bivector_anchor(lambda, a2);
    // Lambda(a1, a2) = a2(rho(a1))
    Poly pairing(a1.nvars());
    for (std::size_t j = 0; j < a1.nvars(); ++j) pairing += r1.components[j] * a2.coefficient({j});
    return interior(r1, ext_d(a2)) - interior(r2, ext_d(a1)) + ext_d(PolyForm::scalar(a1.vars(), pairing));
}

}  // namespace lrw
