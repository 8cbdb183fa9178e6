#include "lrw/cli/commands.hpp"

#include <algorithm>

#include "lrw/courant.hpp"
#include "lrw/lierinehart.hpp"
#include "lrw/pfaff.hpp"
#include "lrw/poisson.hpp"

namespace lrw::cli {

namespace {

bool target_is_product(const AlgebraFile& f, Property p) {
    if (f.kind == AlgebraKind::algebra) return true;
    if (f.kind == AlgebraKind::poisson) return p == Property::associative || p == Property::commutative;
    return false;
}

/// Lie part of a .lie / .alg file; reports the failing property on error.
std::optional<LieAlgebraData> lie_or_report(const AlgebraFile& f, Report& r) {
    const auto g = f.bracket_algebra();
    for (auto p : {Property::anticommutative, Property::jacobi}) {
        auto rep = check_property(g, p);
        if (!rep.holds) {
            r.check(std::string(to_string(p)), rep);
            return std::nullopt;
        }
    }
    return LieAlgebraData(g, f.dual);
}

bool commutative_associative(const StructureAlgebra& a, Report& r) {
    bool ok = true;
    for (auto p : {Property::associative, Property::commutative}) {
        auto rep = check_property(a, p);
        if (!rep.holds) {
            r.check(std::string(to_string(p)), rep);
            ok = false;
        }
    }
    return ok;
}

void describe_l(const LieRinehartPair& p, Report& r) {
    for (std::size_t x = 0; x < p.dim_l(); ++x)
        r.result(p.L().label(x), format_map(p.anchor()[x], p.A().labels()));
}

}  // namespace

void kind_checks(const AlgebraFile& f, Report& r, const std::string& prefix) {
    switch (f.kind) {
        case AlgebraKind::algebra: {
            const auto a = f.product_algebra();
            for (auto p : {Property::associative, Property::commutative}) r.check(prefix + std::string(to_string(p)), check_property(a, p));
            break;
        }
        case AlgebraKind::lie:
        case AlgebraKind::liealg_dual: {
            const auto g = f.bracket_algebra();
            for (auto p : {Property::anticommutative, Property::jacobi}) r.check(prefix + std::string(to_string(p)), check_property(g, p));
            break;
        }
        case AlgebraKind::poisson: {
            const auto a = f.product_algebra();
            const auto b = f.bracket_algebra();
            bool ok = true;
            for (auto p : {Property::associative, Property::commutative}) {
                auto rep = check_property(a, p);
                ok = ok && rep.holds;
                r.check(prefix + std::string(to_string(p)), rep);
            }
            for (auto p : {Property::anticommutative, Property::jacobi}) {
                auto rep = check_property(b, p);
                ok = ok && rep.holds;
                r.check(prefix + "bracket " + std::string(to_string(p)), rep);
            }
            if (ok) r.check(prefix + "leibniz", check_poisson(f.poisson()));
            break;
        }
    }
}

void pair_checks(const LieRinehartPair& p, Report& r, const std::string& prefix) {
    const auto ax = check_lr_axioms(p);
    r.check(prefix + "leibniz", ax.leibniz);
    r.check(prefix + "module compatibility", ax.module_compat);
    r.check(prefix + "anchor morphism", ax.anchor_morphism);
    if (!ax.all_ok()) return;
    for (const auto& id : associator_profile(p).identities) r.check(prefix + id.property, id);
    r.check(prefix + "J_psi = Phi", psi_jacobiator(p).equals_phi);
}

void poisson_law_checks(const PoissonAlgebra& P, const LieRinehartPair& p, Report& r, const std::string& prefix) {
    const std::size_t n = P.dim();
    const std::size_t z = poisson_center(P).dim();
    r.result(prefix + "dim L = dim A - dim Z_P", p.dim_l() + z == n, p.dim_l() + z == n);
    PropertyReport ham = PropertyReport::pass("hamiltonian bracket");
    for (std::size_t x = 0; x < n && ham.holds; ++x)
        for (std::size_t y = 0; y < n && ham.holds; ++y) {
            const auto lhs = commutator(hamiltonian_map(P, unit_vector(n, x)), hamiltonian_map(P, unit_vector(n, y)));
            if (lhs != hamiltonian_map(P, P.bracket().product(x, y)))
                ham = PropertyReport::fail("hamiltonian bracket", {x, y}, P.labels());
        }
    r.check(prefix + "[X_x, X_y] = X_{x,y}", ham);
}

void courant_law_checks(const LieAlgebraData& g, Report& r, const std::string& prefix) {
    const auto checks = courant_checks(g);
    r.check(prefix + "left leibniz", checks.left_leibniz);
    r.note(prefix + "jacobi", checks.jacobi);
    r.check(prefix + "anchor morphism", checks.anchor_morphism);
    r.result(prefix + "complete", checks.complete, checks.complete);
    const auto p = courant_to_lr(g);
    pair_checks(p, r, prefix + "lie-rinehart ");
    const auto c = courant_table(g).algebra;
    const bool same = diamond_table(p).algebra.reordered(c.labels()) == c;
    r.result(prefix + "diamond = courant table", same, same);
}

StructureAlgebra lr_table(const LieRinehartPair& p) {
    auto order = p.L().labels();
    order.insert(order.end(), p.A().labels().begin(), p.A().labels().end());
    return diamond_table(p).algebra.reordered(order);
}

Report cmd_check(const AlgebraFile& f, std::optional<Property> property) {
    Report r("check");
    r.input("kind", std::string(to_string(f.kind)));
    if (!property) {
        kind_checks(f, r);
        return r;
    }
    r.input("property", std::string(to_string(*property)));
    const auto a = target_is_product(f, *property) ? f.product_algebra() : f.bracket_algebra();
    r.check(std::string(to_string(*property)), check_property(a, *property));
    return r;
}

Report cmd_der(const AlgebraFile& f, bool with_table) {
    Report r("der");
    if (f.kind != AlgebraKind::algebra) {
        r.input_error("der needs kind algebra");
        return r;
    }
    const auto a = f.product_algebra();
    const auto der = derivations(a);
    r.line("dim Der(A) = " + std::to_string(der.dim()));
    r.result("dim", der.dim());
    for (std::size_t i = 0; i < der.dim(); ++i) r.result(der.bracket.label(i), format_map(der.gens[i], a.labels()));
    if (with_table) r.table("bracket", der.bracket);
    return r;
}

Report cmd_full_lr(const AlgebraFile& f) {
    Report r("full-lr");
    if (f.kind != AlgebraKind::algebra) {
        r.input_error("full-lr needs kind algebra");
        return r;
    }
    const auto a = f.product_algebra();
    if (!commutative_associative(a, r)) return r;
    const auto p = full_lie_rinehart(a);
    r.result("dim L", p.dim_l());
    describe_l(p, r);
    r.table("table", lr_table(p));
    pair_checks(p, r);
    r.result("faithful", is_faithful(p));
    return r;
}

Report cmd_poisson_lr(const AlgebraFile& f) {
    Report r("poisson-lr");
    if (f.kind != AlgebraKind::poisson) {
        r.input_error("poisson-lr needs kind poisson");
        return r;
    }
    const auto P = f.poisson();
    const auto valid = check_poisson(P);
    if (!valid.holds) {
        r.check(valid.property, valid);
        return r;
    }
    const auto center = poisson_center(P);
    r.result("dim Z_P", center.dim());
    Json zb = Json::array();
    for (const auto& z : center.basis()) zb.push_back(format_lincomb(from_vector(z, P.labels())));
    r.result("Z_P basis", zb);
    std::optional<LieRinehartPair> built;
    try {
        built = poisson_to_lr(P);
    } catch (const ConstructionError& e) {
        r.check("module closure", PropertyReport{"module closure", false, std::vector<std::size_t>{}, e.witness()});
        return r;
    }
    const auto& p = *built;
    r.result("dim L", p.dim_l());
    describe_l(p, r);
    poisson_law_checks(P, p, r);
    r.table("table", lr_table(p));
    pair_checks(p, r);
    r.result("faithful", is_faithful(p));
    return r;
}

Report cmd_courant(const AlgebraFile& f) {
    Report r("courant");
    if (f.kind != AlgebraKind::lie && f.kind != AlgebraKind::liealg_dual) {
        r.input_error("courant needs kind lie or liealg-dual");
        return r;
    }
    const auto g = lie_or_report(f, r);
    if (!g) return r;
    for (std::size_t i = 0; i < g->dim(); ++i)
        r.result("d" + g->dual_labels()[i], ce_differential(*g, unit_vector(g->dim(), i)).str());
    r.table("table", courant_table(*g).algebra);
    courant_law_checks(*g, r);
    return r;
}

Report cmd_pfaff(const std::string& what, const PfaffFile& f, const std::optional<RatVector>& at) {
    Report r("pfaff " + what);
    const auto system = f.system();
    const std::size_t n = system.dim();
    std::vector<RatVector> points;
    if (at) {
        if (at->size() != n) {
            r.input_error("point has " + std::to_string(at->size()) + " coordinates for " + std::to_string(n) + " variables");
            return r;
        }
        points.push_back(*at);
    } else {
        points = default_sample_points(n);
    }
    r.input("points", [&] {
        Json a = Json::array();
        for (const auto& pt : points) a.push_back(format_point(pt));
        return a;
    }());

    if (what == "integrable") {
        r.check("integrable", integrability_check(system));
        return r;
    }
    if (what == "class") {
        for (const auto& pt : points) {
            try {
                const auto rep = cartan_class_at(system, pt);
                const auto chars = characteristic_generators_at(system, pt);
                r.result("class at " + format_point(pt), rep.cls);
                r.line("  p = " + std::to_string(rep.rank) + ", s = " + std::to_string(rep.s) +
                       ", characteristic dim = " + std::to_string(chars.dim));
                r.result("characteristic dim = class at " + format_point(pt), chars.dim == rep.cls, chars.dim == rep.cls);
            } catch (const PreconditionError& e) {
                r.result("class at " + format_point(pt), e.what(), false);
            }
        }
        return r;
    }
    if (system.rank() != 1) {
        r.input_error(what + " needs exactly one form");
        return r;
    }
    const auto& omega = system.forms[0];
    for (const auto& pt : points) {
        if (what == "contact") {
            const bool c = is_contact_form(omega, pt);
            r.result("contact at " + format_point(pt), c, c);
        } else {
            try {
                r.result("R at " + format_point(pt), format_point(reeb_at(omega, pt)));
            } catch (const PreconditionError& e) {
                r.result("R at " + format_point(pt), e.what(), false);
            }
        }
    }
    return r;
}

Report cmd_darboux(std::size_t p, std::size_t m) {
    Report r("pfaff darboux");
    r.input("p", p);
    r.input("m", m);
    if (p == 0 || m == 0) {
        r.input_error("p and m must be at least 1");
        return r;
    }
    const auto s = darboux_system(p, m);
    const std::size_t n = s.dim();
    r.result("n", n);
    Json vars = s.vars;
    r.result("vars", vars);
    for (std::size_t i = 0; i < s.rank(); ++i) r.result(s.names[i], format_form(s.forms[i]));
    r.note("integrable", integrability_check(s));
    for (const auto& pt : default_sample_points(n)) {
        const auto cls = cartan_class_at(s, pt).cls;
        r.result("class at " + format_point(pt), cls);
        if (cls != n) r.fail();
    }
    const auto t = transversal_check(p, m);
    r.check("alpha_i(X_j) = delta_ij", t.duality);
    r.check("i(X_i) d alpha_j = 0", t.annihilation);
    return r;
}

Report cmd_bound(std::optional<std::size_t> p, std::size_t n) {
    Report r("bound");
    if (p) r.input("p", *p);
    r.input("n", n);
    auto one = [&](std::size_t pp, bool prefix) {
        const auto b = max_integral_dim(pp, n);
        const std::string pre = prefix ? "p = " + std::to_string(pp) + ": " : "";
        r.result(pre + "q", b.q.str());
        r.result(pre + "integral", b.integral);
        r.result(pre + "decomposition",
                 b.m ? "(p, m) = (" + std::to_string(pp) + ", " + std::to_string(*b.m) + ")" : std::string("none"));
    };
    try {
        if (p) {
            one(*p, false);
        } else {
            if (n < 2) throw PreconditionError("n must be at least 2");
            for (std::size_t pp = 1; pp < n; ++pp) one(pp, true);
            Json list = Json::array();
            for (const auto& d : contact_decompositions(n))
                list.push_back("(" + std::to_string(d.p) + ", " + std::to_string(*d.m) + ")");
            if (list.empty()) list.push_back("none");
            r.result("p-contact systems", list);
        }
    } catch (const PreconditionError& e) {
        r.input_error(e.what());
    }
    return r;
}

}  // namespace lrw::cli
