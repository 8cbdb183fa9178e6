#include "doctest.h"

#include "fixtures.hpp"
#include "lrw/poisson.hpp"

using lrw::RatVector;

namespace {

std::vector<lrw::PoissonAlgebra> poisson_corpus() {
    return {fixtures::poisson_case5(), fixtures::poisson_dim3(),
            lrw::PoissonAlgebra(fixtures::dim3_unital_nil(), lrw::StructureAlgebra(fixtures::dim3_unital_nil().labels()))};
}

RatVector e(std::size_t n, std::size_t i) { return lrw::unit_vector(n, i); }

}  // namespace

TEST_CASE("check_poisson") {
    CHECK(lrw::check_poisson(fixtures::poisson_case5()).holds);
    CHECK(lrw::check_poisson(fixtures::poisson_dim3()).holds);

    auto br = fixtures::build({"e1", "e2", "e3"}, {{"e1", "e2", {{1, "e2"}}}, {"e2", "e1", {{-1, "e2"}}}});
    const lrw::PoissonAlgebra bad(fixtures::dim3_unital_zero(), br);
    const auto r = lrw::check_poisson(bad);
    CHECK_FALSE(r.holds);
    CHECK(r.property == "leibniz");
    // {e2, e1 e1} = -e2 while e1{e2,e1} + {e2,e1}e1 = -2 e2
    CHECK(lrw::witness_string(r) == "(e2, e1, e1)");

    // A non-Lie bracket is reported before Leibniz.
    auto sym = fixtures::build({"e1", "e2"}, {{"e1", "e2", {{1, "e2"}}}, {"e2", "e1", {{1, "e2"}}}});
    CHECK(lrw::check_poisson(lrw::PoissonAlgebra(fixtures::zero_algebra(2), sym)).property == "anticommutative");
}

TEST_CASE("hamiltonian maps of the three-dimensional remark") {
    const auto p = fixtures::poisson_dim3();
    CHECK(lrw::hamiltonian_map(p, e(3, 0)) == lrw::LinearMap::zero(3));
    CHECK(lrw::hamiltonian_map(p, e(3, 1)) == fixtures::map(3, {{3, 3, 1}}));   // X4
    CHECK(lrw::hamiltonian_map(p, e(3, 2)) == fixtures::map(3, {{2, 3, -1}}));  // -X2
}

TEST_CASE("poisson_center") {
    CHECK(lrw::poisson_center(fixtures::poisson_case5()).dim() == 0);
    CHECK(lrw::poisson_center(fixtures::poisson_dim3()) == lrw::Subspace::span(3, {e(3, 0)}));
    const lrw::PoissonAlgebra trivial(fixtures::dim3_unital_zero(), lrw::StructureAlgebra(fixtures::dim3_unital_zero().labels()));
    CHECK(lrw::poisson_center(trivial) == lrw::Subspace::full(3));
    const auto p = fixtures::poisson_dim3();
    const auto center = lrw::poisson_center(p);
    for (const auto& z : center.basis()) CHECK(lrw::hamiltonian_map(p, z) == lrw::LinearMap::zero(3));
}

TEST_CASE("Poisson laws on every fixture") {
    for (const auto& p : poisson_corpus()) {
        const std::size_t n = p.dim();
        for (std::size_t x = 0; x < n; ++x) {
            const auto hx = lrw::hamiltonian_map(p, e(n, x));
            CHECK(lrw::is_derivation(p.assoc(), hx).holds);
            for (std::size_t y = 0; y < n; ++y) {
                const auto hy = lrw::hamiltonian_map(p, e(n, y));
                CHECK(lrw::commutator(hx, hy) == lrw::hamiltonian_map(p, p.bracket().product(x, y)));
            }
        }
        CHECK(lrw::hamiltonian_image(p).dim() == n - lrw::poisson_center(p).dim());
        const auto lr = lrw::poisson_to_lr(p);
        CHECK(lr.dim_l() == n - lrw::poisson_center(p).dim());
        CHECK(lrw::check_lr_axioms(lr).all_ok());
        CHECK(lrw::psi_jacobiator(lr).equals_phi.holds);
    }
}

TEST_CASE("Poisson-derived pair of case 5") {
    const auto p = fixtures::poisson_case5();
    const auto lr = lrw::poisson_to_lr(p);
    CHECK(lrw::is_faithful(lr));
    const auto got = fixtures::named_table(lr, {{"X", lrw::hamiltonian_map(p, e(2, 0))}, {"Y", lrw::hamiltonian_map(p, e(2, 1))}},
                                           {"X", "Y", "e1", "e2"});
    const auto want = fixtures::table({"X", "Y", "e1", "e2"}, {
        {"0", "Y", "0", "e2"},
        {"-Y", "0", "-e2", "0"},
        {"0", "0", "0", "0"},
        {"0", "0", "0", "0"},
    });
    CHECK(got == want);
    // X = X4 and Y = -X3 in the elementary basis of gl(2).
    CHECK(lrw::hamiltonian_map(p, e(2, 0)) == fixtures::map(2, {{2, 2, 1}}));
    CHECK(lrw::hamiltonian_map(p, e(2, 1)) == fixtures::map(2, {{1, 2, -1}}));
}

TEST_CASE("Poisson-derived pair of the three-dimensional remark") {
    const auto p = fixtures::poisson_dim3();
    const auto lr = lrw::poisson_to_lr(p);
    // e1 is central, yet the image pair is still faithful.
    CHECK(lrw::is_faithful(lr));
    const auto got = fixtures::named_table(lr, {{"X", lrw::hamiltonian_map(p, e(3, 1))}, {"Y", lrw::hamiltonian_map(p, e(3, 2))}},
                                           {"X", "Y", "e1", "e2", "e3"});
    const auto want = fixtures::table({"X", "Y", "e1", "e2", "e3"}, {
        {"0", "Y", "0", "0", "e3"},
        {"-Y", "0", "0", "-e3", "0"},
        {"X", "Y", "e1", "e2", "e3"},
        {"0", "0", "e2", "0", "0"},
        {"0", "0", "e3", "0", "0"},
    });
    CHECK(got == want);
}

TEST_CASE("trivial bracket gives L = 0") {
    const lrw::PoissonAlgebra p(fixtures::dim3_unital_nil(), lrw::StructureAlgebra(fixtures::dim3_unital_nil().labels()));
    const auto lr = lrw::poisson_to_lr(p);
    CHECK(lr.dim_l() == 0);
    CHECK(lrw::diamond_table(lr).algebra == fixtures::dim3_unital_nil());
}
