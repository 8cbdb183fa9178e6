// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "lrw/cli/formats.hpp"
#include "lrw/courant.hpp"
#include "lrw/lierinehart.hpp"
#include "lrw/pfaff.hpp"
#include "lrw/poisson.hpp"

using lrw::LieRinehartPair;
using lrw::LinearMap;
using lrw::Rational;
using lrw::RatVector;
using lrw::StructureAlgebra;

namespace {

/// Collects failures; a criterion passes when nothing was recorded.
struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

RatVector e(std::size_t n, std::size_t i) { return lrw::unit_vector(n, i); }

// ---------------------------------------------------------------- 1

void derivation_dims(Tally& t) {
    const std::vector<std::pair<std::string, std::pair<StructureAlgebra, std::size_t>>> cases{
        {"dim3 e3e3=e2", {fixtures::dim3_unital_nil(), 2}}, {"case 1", {fixtures::dim2_case1(), 0}},
        {"case 2", {fixtures::dim2_case2(), 1}},            {"case 3", {fixtures::dim2_case3(), 2}},
        {"case 4", {fixtures::dim2_case4(), 1}},            {"case 5", {fixtures::zero_algebra(2), 4}},
        {"dim3 unital", {fixtures::dim3_unital_zero(), 4}},
    };
    for (const auto& [name, c] : cases) t.expect(lrw::derivations(c.first).dim() == c.second, name);
    t.expect(lrw::derivations(fixtures::zero_algebra(2)).bracket.tensor() == fixtures::gl(2).tensor(), "Der(O_2) = gl(2)");
}

// ---------------------------------------------------------------- 2

void reference_tables(Tally& t) {
    using fixtures::map;
    using fixtures::table;
    {
        const auto p = lrw::full_lie_rinehart(fixtures::dim3_unital_nil());
        const auto got = fixtures::named_table(p, {{"X", map(3, {{2, 2, 2}, {3, 3, 1}})}, {"Y", map(3, {{3, 2, 1}})}},
                                       {"X", "Y", "e1", "e2", "e3"});
        t.expect(got == table({"X", "Y", "e1", "e2", "e3"}, {{"0", "Y", "0", "2e2", "e3"},
                                                             {"-Y", "0", "0", "0", "e2"},
                                                             {"X", "Y", "e1", "e2", "e3"},
                                                             {"0", "0", "e2", "0", "0"},
                                                             {"Y", "0", "e3", "0", "e2"}}),
                 "5x5 full pair");
    }
    {
        const auto p = lrw::full_lie_rinehart(fixtures::dim2_case2());
        const auto got = fixtures::named_table(p, {{"X", map(2, {{2, 2, 1}})}}, {"X", "e1", "e2"});
        t.expect(got == table({"X", "e1", "e2"}, {{"0", "0", "e2"}, {"X", "e1", "e2"}, {"0", "e2", "0"}}), "case 2");
    }
    {
        const auto p = lrw::full_lie_rinehart(fixtures::dim2_case3());
        const auto y = map(2, {{1, 2, 1}});
        const auto got = fixtures::named_table(p, {{"X", map(2, {{1, 1, 1}, {2, 2, 2}})}, {"Y", y}}, {"X", "Y", "e1", "e2"});
        t.expect(got == table({"X", "Y", "e1", "e2"}, {{"0", "Y", "e1", "2e2"},
                                                      {"-Y", "0", "e2", "0"},
                                                      {"Y", "0", "e2", "0"},
                                                      {"0", "0", "0", "0"}}),
                 "case 3 full");
        const auto sub = lrw::restrict_lie_rinehart(fixtures::dim2_case3(), lrw::Subspace::span(4, {y.flat()}), {"Y"});
        t.expect(lrw::diamond_table(sub).algebra.reordered({"Y", "e1", "e2"}) ==
                     table({"Y", "e1", "e2"}, {{"0", "e2", "0"}, {"0", "e2", "0"}, {"0", "0", "0"}}),
                 "case 3 sub-pair");
    }
    {
        const auto p = lrw::full_lie_rinehart(fixtures::dim2_case4());
        const auto got = fixtures::named_table(p, {{"X", map(2, {{2, 2, 1}})}}, {"X", "e1", "e2"});
        t.expect(got == table({"X", "e1", "e2"}, {{"0", "0", "e2"}, {"0", "e1", "0"}, {"0", "0", "0"}}), "case 4");
    }
    {
        const auto p = lrw::full_lie_rinehart(fixtures::zero_algebra(2));
        const auto got = fixtures::named_table(p, {{"X1", map(2, {{1, 1, 1}})}, {"X2", map(2, {{2, 1, 1}})},
                                           {"X3", map(2, {{1, 2, 1}})}, {"X4", map(2, {{2, 2, 1}})}},
                                       {"X1", "X2", "X3", "X4", "e1", "e2"});
        t.expect(got == table({"X1", "X2", "X3", "X4", "e1", "e2"}, {{"0", "X2", "-X3", "0", "e1", "0"},
                                                                    {"-X2", "0", "X1-X4", "X2", "0", "e1"},
                                                                    {"X3", "-X1+X4", "0", "-X3", "e2", "0"},
                                                                    {"0", "-X2", "X3", "0", "0", "e2"},
                                                                    {"0", "0", "0", "0", "0", "0"},
                                                                    {"0", "0", "0", "0", "0", "0"}}),
                 "case 5 6x6");
    }
    {
        const auto P = fixtures::poisson_case5();
        const auto lr = lrw::poisson_to_lr(P);
        const auto got = fixtures::named_table(lr, {{"X", lrw::hamiltonian_map(P, e(2, 0))}, {"Y", lrw::hamiltonian_map(P, e(2, 1))}},
                                       {"X", "Y", "e1", "e2"});
        t.expect(got == table({"X", "Y", "e1", "e2"}, {{"0", "Y", "0", "e2"},
                                                      {"-Y", "0", "-e2", "0"},
                                                      {"0", "0", "0", "0"},
                                                      {"0", "0", "0", "0"}}),
                 "case 5 Poisson 4x4");
    }
    {
        const auto p = lrw::full_lie_rinehart(fixtures::dim3_unital_zero());
        const auto got = fixtures::named_table(p, {{"X1", map(3, {{2, 2, 1}})}, {"X2", map(3, {{2, 3, 1}})},
                                           {"X3", map(3, {{3, 2, 1}})}, {"X4", map(3, {{3, 3, 1}})}},
                                       {"X1", "X2", "X3", "X4", "e1", "e2", "e3"});
        t.expect(got == table({"X1", "X2", "X3", "X4", "e1", "e2", "e3"},
                              {{"0", "-X2", "X3", "0", "0", "e2", "0"},
                               {"X2", "0", "X4-X1", "-X2", "0", "e3", "0"},
                               {"-X3", "X1-X4", "0", "X3", "0", "0", "e2"},
                               {"0", "X2", "-X3", "0", "0", "0", "e3"},
                               {"X1", "X2", "X3", "X4", "e1", "e2", "e3"},
                               {"0", "0", "0", "0", "e2", "0", "0"},
                               {"0", "0", "0", "0", "e3", "0", "0"}}),
                 "dim 3 7x7");
    }
    {
        const auto P = fixtures::poisson_dim3();
        const auto lr = lrw::poisson_to_lr(P);
        const auto got = fixtures::named_table(lr, {{"X", lrw::hamiltonian_map(P, e(3, 1))}, {"Y", lrw::hamiltonian_map(P, e(3, 2))}},
                                       {"X", "Y", "e1", "e2", "e3"});
        t.expect(got == table({"X", "Y", "e1", "e2", "e3"}, {{"0", "Y", "0", "0", "e3"},
                                                            {"-Y", "0", "0", "-e3", "0"},
                                                            {"X", "Y", "e1", "e2", "e3"},
                                                            {"0", "0", "e2", "0", "0"},
                                                            {"0", "0", "e3", "0", "0"}}),
                 "dim 3 Poisson 5x5");
    }
    {
        const auto c = lrw::courant_table(lrw::LieAlgebraData(fixtures::solvable2())).algebra;
        const auto got = c.change_basis(lrw::RatMatrix::identity(4), {"v1", "v2", "v3", "v4"});
        t.expect(got == table({"v1", "v2", "v3", "v4"}, {{"0", "v2", "0", "-v4"},
                                                        {"-v2", "0", "0", "v3"},
                                                        {"0", "0", "0", "0"},
                                                        {"0", "0", "0", "0"}}),
                 "Courant 4x4");
    }
}

// ---------------------------------------------------------------- 3, 4

std::vector<std::pair<std::string, LieRinehartPair>> all_pairs() {
    std::vector<std::pair<std::string, LieRinehartPair>> out;
    const std::vector<std::pair<std::string, StructureAlgebra>> comm{
        {"dim3 e3e3=e2", fixtures::dim3_unital_nil()}, {"case 1", fixtures::dim2_case1()},
        {"case 2", fixtures::dim2_case2()},            {"case 3", fixtures::dim2_case3()},
        {"case 4", fixtures::dim2_case4()},            {"case 5", fixtures::zero_algebra(2)},
        {"dim3 unital", fixtures::dim3_unital_zero()},
    };
    for (const auto& [name, a] : comm) out.emplace_back(name + " full", lrw::full_lie_rinehart(a));
    out.emplace_back("case 3 sub", lrw::restrict_lie_rinehart(fixtures::dim2_case3(),
                                                              lrw::Subspace::span(4, {fixtures::map(2, {{1, 2, 1}}).flat()}),
                                                              {"Y"}));
    out.emplace_back("case 5 Poisson", lrw::poisson_to_lr(fixtures::poisson_case5()));
    out.emplace_back("dim3 Poisson", lrw::poisson_to_lr(fixtures::poisson_dim3()));
    out.emplace_back("solvable Courant", lrw::courant_to_lr(lrw::LieAlgebraData(fixtures::solvable2())));
    out.emplace_back("Heisenberg Courant", lrw::courant_to_lr(lrw::LieAlgebraData(fixtures::heisenberg3())));
    for (std::size_t n = 1; n <= 3; ++n) out.emplace_back("O_" + std::to_string(n), lrw::full_lie_rinehart(fixtures::zero_algebra(n)));
    return out;
}

void axioms(Tally& t) {
    for (const auto& [name, p] : all_pairs()) {
        t.expect(lrw::check_lr_axioms(p).all_ok(), name + " axioms");
        t.expect(lrw::associator_profile(p).all_hold(), name + " associators");
    }
}

void psi_proposition(Tally& t) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto p = lrw::full_lie_rinehart(fixtures::zero_algebra(n));
        const auto j = lrw::psi_jacobiator(p);
        bool zero = j.identically_zero;
        for (const auto& v : j.values) zero = zero && lrw::is_zero(v);
        t.expect(zero, "J_psi = 0 on (O_" + std::to_string(n) + ", gl)");
    }
    for (const auto& [name, p] : all_pairs()) {
        const auto j = lrw::psi_jacobiator(p);
        bool same = j.equals_phi.holds;
        // Recompare against Phi directly rather than trusting the flag.
        for (std::size_t u = 0; u < j.dim; ++u)
            for (std::size_t v = 0; v < j.dim; ++v)
                for (std::size_t w = 0; w < j.dim; ++w) same = same && j.at(u, v, w) == lrw::phi(p, u, v, w);
        t.expect(same, name + " J_psi = Phi");
    }
}

// ---------------------------------------------------------------- 5

void poisson_laws(Tally& t) {
    for (const auto& [name, P] : std::vector<std::pair<std::string, lrw::PoissonAlgebra>>{
             {"case 5", fixtures::poisson_case5()}, {"dim 3", fixtures::poisson_dim3()}}) {
        const std::size_t n = P.dim();
        t.expect(lrw::check_poisson(P).holds, name + " Poisson laws");
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                t.expect(lrw::commutator(lrw::hamiltonian_map(P, e(n, x)), lrw::hamiltonian_map(P, e(n, y))) ==
                             lrw::hamiltonian_map(P, P.bracket().product(x, y)),
                         name + " [X_x, X_y]");
        t.expect(lrw::poisson_to_lr(P).dim_l() == n - lrw::poisson_center(P).dim(), name + " dim L");
    }
}

// ---------------------------------------------------------------- 6

void courant(Tally& t) {
    const lrw::LieAlgebraData s(fixtures::solvable2());
    const auto rs = lrw::courant_checks(s);
    t.expect(rs.left_leibniz.holds, "solvable left Leibniz");
    t.expect(!rs.jacobi.holds && rs.jacobi.witness && rs.jacobi.witness->size() == 3, "solvable Jacobi witness");
    t.expect(rs.anchor_morphism.holds && rs.complete, "solvable anchor and completeness");

    // Independent recheck of left Leibniz on all 64 triples.
    const auto c = lrw::courant_table(s).algebra;
    std::size_t triples = 0;
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k, ++triples) {
                const auto lhs = c.multiply(e(4, i), c.product(j, k));
                auto rhs = c.multiply(c.product(i, j), e(4, k));
                lrw::axpy(rhs, 1, c.multiply(e(4, j), c.product(i, k)));
                ok = ok && lhs == rhs;
            }
    t.expect(ok && triples == 64, "solvable 64 triples");

    const lrw::LieAlgebraData h(fixtures::heisenberg3());
    const auto rh = lrw::courant_checks(h);
    t.expect(rh.left_leibniz.holds && rh.anchor_morphism.holds && rh.complete, "Heisenberg extension");
    t.expect(lrw::courant_table(h).algebra.dim() == 6, "Heisenberg 216 triples");
}

// ---------------------------------------------------------------- 7

void contact_class(Tally& t) {
    const lrw::VarList xyz{"x", "y", "z"};
    const auto w = lrw::PolyForm::basis(xyz, {2}) + lrw::Poly::variable(3, 0) * lrw::PolyForm::basis(xyz, {1});
    const lrw::PfaffSystem hs(xyz, {"w"}, {w});
    for (const auto& pt : lrw::default_sample_points(3)) {
        t.expect(lrw::cartan_class_at(hs, pt).cls == 3, "Heisenberg class");
        t.expect(lrw::reeb_at(w, pt) == RatVector{0, 0, 1}, "Heisenberg Reeb");
    }
    t.expect(!lrw::integrability_check(hs).holds, "Heisenberg not integrable");

    for (std::size_t k = 1; k <= 4; ++k) {
        const auto a = lrw::darboux_contact(k);
        const std::size_t n = 2 * k + 1;
        const lrw::PfaffSystem s(a.vars(), {"a"}, {a});
        for (const auto& pt : lrw::default_sample_points(n)) {
            t.expect(lrw::cartan_class_at(s, pt).cls == n, "Darboux contact class");
            t.expect(lrw::reeb_at(a, pt) == e(n, 0), "Darboux contact Reeb");
        }
        t.expect(!lrw::integrability_check(s).holds, "Darboux contact not integrable");
    }
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto s = lrw::darboux_system(p, m);
            for (const auto& pt : lrw::default_sample_points(s.dim()))
                t.expect(lrw::cartan_class_at(s, pt).cls == p + m + p * m, "Darboux system class");
        }
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t p = 1; p < n; ++p) {
            lrw::VarList v;
            for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
            std::vector<lrw::PolyForm> forms;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < p; ++i) {
                forms.push_back(lrw::PolyForm::basis(v, {i}));
                names.push_back("a" + std::to_string(i + 1));
            }
            const lrw::PfaffSystem s(v, names, forms);
            t.expect(lrw::integrability_check(s).holds, "coordinate system integrable");
            for (const auto& pt : lrw::default_sample_points(n)) t.expect(lrw::cartan_class_at(s, pt).cls == p, "coordinate class");
        }
}

// ---------------------------------------------------------------- 8

void bound(Tally& t) {
    const auto b13 = lrw::max_integral_dim(1, 3);
    t.expect(b13.q == 1 && b13.integral && b13.m == std::optional<std::size_t>(1), "n = 3, p = 1");
    t.expect(!lrw::max_integral_dim(2, 3).m, "n = 3, p = 2");
    t.expect(lrw::contact_decompositions(3).size() == 1, "n = 3 single case");
    t.expect(lrw::contact_decompositions(4).empty(), "n = 4 none");
    const auto five = lrw::contact_decompositions(5);
    t.expect(five.size() == 2, "n = 5 two cases");
    if (five.size() == 2) {
        t.expect(five[0].p == 1 && five[0].q == 2 && five[0].m == std::optional<std::size_t>(2), "n = 5, p = 1");
        t.expect(five[1].p == 2 && five[1].q == 2 && five[1].m == std::optional<std::size_t>(1), "n = 5, p = 2");
    }
}

// ---------------------------------------------------------------- 9

StructureAlgebra random_algebra(std::mt19937& gen) {
    const std::size_t n = 1 + gen() % 3;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    StructureAlgebra a(labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.set_coeff(i, j, k, Rational(static_cast<long>(gen() % 3) - 1));
    return a;
}

lrw::Poly random_poly(std::mt19937& gen, std::size_t n) {
    lrw::Poly p(n);
    const int terms = static_cast<int>(gen() % 4);
    for (int k = 0; k < terms; ++k) {
        lrw::Monomial m(n);
        for (auto& x : m) x = gen() % 3 == 0 ? gen() % 3 : 0;
        p.add_term(m, Rational(static_cast<long>(gen() % 5) - 2));
    }
    return p;
}

lrw::PolyForm random_form(std::mt19937& gen, const lrw::VarList& v, std::size_t degree) {
    lrw::PolyForm f(v, degree);
    const int terms = 1 + static_cast<int>(gen() % 3);
    for (int k = 0; k < terms; ++k) {
        lrw::PolyForm::Indices idx;
        for (std::size_t d = 0; d < degree; ++d) idx.push_back(gen() % v.size());
        f.add(idx, random_poly(gen, v.size()));
    }
    return f;
}

void property_suites(Tally& t, const std::filesystem::path& corpus) {
    std::mt19937 gen(20260516);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_algebra(gen);
        const auto der = lrw::derivations(a);
        bool ok = true;
        for (const auto& g : der.gens) ok = ok && lrw::is_derivation(a, g).holds;
        for (const auto& x : der.gens)
            for (const auto& y : der.gens) ok = ok && der.coordinates(lrw::commutator(x, y)).has_value();
        t.expect(ok, "random algebra " + std::to_string(trial));
    }

    std::mt19937 fgen(20260517);
    for (int trial = 0; trial < 100; ++trial) {
        lrw::VarList v;
        const std::size_t n = 1 + fgen() % 5;
        for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
        const std::size_t da = fgen() % std::min<std::size_t>(4, n + 1);
        const std::size_t db = fgen() % std::min<std::size_t>(4, n + 1);
        const auto a = random_form(fgen, v, da);
        const auto b = random_form(fgen, v, db);
        const Rational sgn((da * db) % 2 ? -1 : 1);
        bool ok = lrw::ext_d(lrw::ext_d(a)).is_zero() && lrw::wedge(a, b) == sgn * lrw::wedge(b, a);
        lrw::PolyVectorField x{v, {}};
        for (std::size_t i = 0; i < n; ++i) x.components.push_back(random_poly(fgen, n));
        if (da + db >= 1) {
            lrw::PolyForm rhs(v, da + db - 1);
            if (da >= 1) rhs += lrw::wedge(lrw::interior(x, a), b);
            if (db >= 1) rhs += Rational(da % 2 ? -1 : 1) * lrw::wedge(a, lrw::interior(x, b));
            ok = ok && lrw::interior(x, lrw::wedge(a, b)) == rhs;
        }
        t.expect(ok, "random form " + std::to_string(trial));
    }

    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
        if (entry.path().extension() != ".alg") continue;
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        const auto f = lrw::cli::parse_algebra(buf.str());
        const auto a = f.product_algebra();
        t.expect(lrw::module_closure_check(a, lrw::derivations(a).space).holds,
                 "module closure " + entry.path().filename().string());
        ++seen;
    }
    t.expect(seen > 0, "corpus has algebras");
}

// ---------------------------------------------------------------- 10

std::pair<int, std::string> capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_determinism(Tally& t, const std::string& binary, const std::filesystem::path& corpus) {
    const std::string cmd = "'" + binary + "' corpus run --dir '" + corpus.string() + "'";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    t.expect(a.first == 0, "first run exit " + std::to_string(a.first));
    t.expect(b.first == 0, "second run exit " + std::to_string(b.first));
    t.expect(!a.second.empty() && a.second == b.second, "identical output");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : LRW_BINARY;
    const std::filesystem::path corpus = argc > 2 ? argv[2] : LRW_TEST_CORPUS;

    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
        {"derivation dimensions", derivation_dims},
        {"reference table reproduction", reference_tables},
        {"Lie-Rinehart axioms and associator identities", axioms},
        {"psi Jacobiator and J_psi = Phi", psi_proposition},
        {"Poisson laws", poisson_laws},
        {"Courant algebra checks", courant},
        {"contact forms and Cartan class", contact_class},
        {"integral manifold bound", bound},
        {"randomized property suites", [&](Tally& t) { property_suites(t, corpus); }},
        {"corpus run determinism", [&](Tally& t) { cli_determinism(t, binary, corpus); }},
    };

    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            criteria[i].second(t);
        } catch (const std::exception& ex) {
            t.failures.push_back(std::string("exception: ") + ex.what());
        }
        const bool ok = t.failures.empty();
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first << " (" << t.checks
                  << " checks)";
        if (!ok) std::cout << ": " << t.failures.front();
        std::cout << "\n";
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "elapsed " << ms << " ms\n";
    return all && ms < 60000 ? 0 : 1;
}
