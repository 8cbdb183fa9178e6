#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lrw/algebra.hpp"
#include "lrw/poly.hpp"

namespace lrw {

/// Rank-p Pfaff system given by 1-forms alpha_1..alpha_p over one variable list.
struct PfaffSystem {
    VarList vars;
    std::vector<std::string> names;
    std::vector<PolyForm> forms;

    PfaffSystem(VarList vars, std::vector<std::string> names, std::vector<PolyForm> forms);
    [[nodiscard]] std::size_t rank() const { return forms.size(); }
    [[nodiscard]] std::size_t dim() const { return vars.size(); }
};

/// Origin followed by three pseudorandom rational points from a fixed seed.
[[nodiscard]] std::vector<RatVector> default_sample_points(std::size_t n);

/// Throws PreconditionError on even ambient dimension or non-1-forms.
[[nodiscard]] bool is_contact_form(const PolyForm& omega, std::span<const Rational> point);

/// Unique R with omega(R) = 1, i(R) d omega = 0 at the point. Throws
/// PreconditionError when omega is not contact there.
[[nodiscard]] RatVector reeb_at(const PolyForm& omega, std::span<const Rational> point);

/// Cartan class certificate at a point, computed on the quotient V*/W with
/// W = span(alpha_i(x)). Quotient coordinates are the non-pivot variables
/// of the RREF of W.
struct ClassReport {
    RatVector point;
    std::size_t rank = 0;
    std::vector<std::size_t> quotient_vars;   ///< variable indices spanning V*/W
    std::vector<RatMatrix> quotient_forms;    ///< reduced d alpha_i as antisymmetric matrices
    std::vector<Subspace> supports;           ///< S_i inside V*/W
    std::size_t s = 0;                        ///< dim of sum of supports
    std::size_t cls = 0;                      ///< s + rank
};

/// Throws PreconditionError when the forms are dependent at the point.
[[nodiscard]] ClassReport cartan_class_at(const PfaffSystem& system, std::span<const Rational> point);

/// d alpha_i ^ alpha_1 ^ ... ^ alpha_p = 0 identically for every i; the
/// witness is the first failing form.
[[nodiscard]] PropertyReport integrability_check(const PfaffSystem& system);

struct CharacteristicSpan {
    std::vector<RatVector> generators;  ///< alpha_i(x), then i(X_j) d alpha_i (x)
    std::size_t dim = 0;
};

/// Generators of the characteristic system using the annihilator of the
/// system at the point as the complementary fields X_j.
[[nodiscard]] CharacteristicSpan characteristic_generators_at(const PfaffSystem& system,
                                                              std::span<const Rational> point);

/// dx1 + x2 dx3 + ... + x_{2k} dx_{2k+1} on x1..x_{2k+1}.
[[nodiscard]] PolyForm darboux_contact(std::size_t k);

/// alpha_i = dx_i + sum_{j=1..m} z_{(j-1)p+i} dy_j on x1..xp, y1..ym, z1..z_pm.
[[nodiscard]] PfaffSystem darboux_system(std::size_t p, std::size_t m);

struct IntegralBound {
    std::size_t p = 0;
    std::size_t n = 0;
    Rational q;                        ///< p(n-p)/(p+1)
    bool integral = false;
    std::optional<std::size_t> m;      ///< n = p + m + pm when solvable with m >= 1
};

/// Throws PreconditionError unless 1 <= p < n.
[[nodiscard]] IntegralBound max_integral_dim(std::size_t p, std::size_t n);

/// All (p, m) with n = p + m + pm, p, m >= 1, in increasing p.
[[nodiscard]] std::vector<IntegralBound> contact_decompositions(std::size_t n);

struct TransversalReport {
    PropertyReport duality;       ///< alpha_i(X_j) = delta_ij
    PropertyReport annihilation;  ///< i(X_i) d alpha_j = 0
    [[nodiscard]] bool ok() const { return duality.holds && annihilation.holds; }
};

[[nodiscard]] TransversalReport transversal_check(std::size_t p, std::size_t m);

/// {a1, a2} = i(rho(a1)) d a2 - i(rho(a2)) d a1 + d(Lambda(a1, a2)) with
/// rho(sum a_i dx_i) = sum_j (sum_i rho_ij a_i) d/dx_j.
[[nodiscard]] PolyForm poisson_cotangent_bracket(const PolyBivector& lambda, const PolyForm& a1, const PolyForm& a2);

/// rho(alpha) for the bivector.
[[nodiscard]] PolyVectorField bivector_anchor(const PolyBivector& lambda, const PolyForm& alpha);

}  // namespace lrw
