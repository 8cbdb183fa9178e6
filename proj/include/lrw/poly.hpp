#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lrw/errors.hpp"
#include "lrw/exactlin.hpp"

namespace lrw {

using VarList = std::vector<std::string>;
using Monomial = std::vector<unsigned>;  ///< exponent per variable

/// Multivariate polynomial over Q. Terms are kept in lexicographic exponent
/// order with no zero coefficients, so equal polynomials compare equal.
class Poly {
public:
    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t i);

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;

    void add_term(const Monomial& m, const Rational& c);

    [[nodiscard]] Poly derivative(std::size_t var) const;
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
    [[nodiscard]] std::string str(const VarList& vars) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void check(const Poly& o) const;

    std::size_t nvars_;
    std::map<Monomial, Rational> terms_;
};

/// Differential form of degree k on Q^n with polynomial coefficients,
/// keyed by strictly increasing index tuples.
class PolyForm {
public:
    using Indices = std::vector<std::size_t>;

    PolyForm(VarList vars, std::size_t degree) : vars_(std::move(vars)), degree_(degree) {}

    static PolyForm scalar(VarList vars, const Poly& f);
    /// sum_i coeffs[i] dx_i
    static PolyForm one_form(VarList vars, const std::vector<Poly>& coeffs);
    /// Constant-coefficient 1-form.
    static PolyForm covector(VarList vars, std::span<const Rational> coeffs);
    /// dx_i1 ^ ... ^ dx_ik (any order; sign follows the sorting permutation).
    static PolyForm basis(VarList vars, const Indices& indices);

    [[nodiscard]] const VarList& vars() const { return vars_; }
    [[nodiscard]] std::size_t nvars() const { return vars_.size(); }
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const std::map<Indices, Poly>& terms() const { return terms_; }
    [[nodiscard]] Poly coefficient(const Indices& sorted) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;

    /// Adds c dx_I; I may be unsorted, repeated indices give zero.
    void add(Indices indices, const Poly& c);

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator*(const Poly& f, const PolyForm& a);
    friend PolyForm operator*(const Rational& c, const PolyForm& a);
    friend bool operator==(const PolyForm&, const PolyForm&) = default;

    /// e.g. "dz + x*dy", "dx^dy", "0".
    [[nodiscard]] std::string str() const;

private:
    void check(const PolyForm& o) const;

    VarList vars_;
    std::size_t degree_;
    std::map<Indices, Poly> terms_;
};

struct PolyVectorField {
    VarList vars;
    std::vector<Poly> components;

    static PolyVectorField coordinate(const VarList& vars, std::size_t i);  ///< d/dx_i
    static PolyVectorField constant(const VarList& vars, std::span<const Rational> v);
};

/// Bivector sum_{i<j} rho_ij d/dx_i ^ d/dx_j with rho_ji = -rho_ij.
struct PolyBivector {
    VarList vars;
    std::map<std::pair<std::size_t, std::size_t>, Poly> entries;

    [[nodiscard]] Poly rho(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Poly& value);
};

[[nodiscard]] PolyForm wedge(const PolyForm& a, const PolyForm& b);
[[nodiscard]] PolyForm ext_d(const PolyForm& a);
/// Contraction in the first slot. Throws PreconditionError on a 0-form.
[[nodiscard]] PolyForm interior(const PolyVectorField& x, const PolyForm& a);
/// Substitutes the point; the result has constant coefficients.
[[nodiscard]] PolyForm eval_at(const PolyForm& a, std::span<const Rational> point);

/// A constant 1-form as a coordinate vector; throws if not constant or degree != 1.
[[nodiscard]] RatVector covector_of(const PolyForm& a);
/// A constant 2-form as its antisymmetric matrix B(i, j) = a(e_i, e_j).
[[nodiscard]] RatMatrix bilinear_of(const PolyForm& a);

}  // namespace lrw
