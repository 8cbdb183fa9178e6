#pragma once

#include <string>
#include <vector>

#include "lrw/algebra.hpp"
#include "lrw/lierinehart.hpp"

namespace lrw {

/// A finite-dimensional Lie algebra g together with labels for the dual
/// basis of g*.
class LieAlgebraData {
public:
    /// Dual labels default to w1..wn. Throws when g is not a Lie algebra.
    explicit LieAlgebraData(StructureAlgebra g, std::vector<std::string> dual_labels = {});

    [[nodiscard]] std::size_t dim() const { return g_.dim(); }
    [[nodiscard]] const StructureAlgebra& g() const { return g_; }
    [[nodiscard]] const std::vector<std::string>& dual_labels() const { return dual_; }

private:
    StructureAlgebra g_;
    std::vector<std::string> dual_;
};

/// A 2-form on g written in the dual basis, coefficient(i, j) being the
/// value on (e_i, e_j). Antisymmetric; w_i^w_j(X, Y) = w_i(X)w_j(Y) - w_i(Y)w_j(X).
struct DualTwoForm {
    std::vector<std::string> dual_labels;
    RatMatrix values;

    [[nodiscard]] bool is_zero() const { return values.is_zero(); }
    /// e.g. "-w1^w2", "0".
    [[nodiscard]] std::string str() const;
};

/// Chevalley-Eilenberg differential of a left-invariant 1-form:
/// dw(X, Y) = -w([X, Y]).
[[nodiscard]] DualTwoForm ce_differential(const LieAlgebraData& g, std::span<const Rational> omega);

/// [[(X1, w1), (X2, w2)]] = ([X1, X2], i(X1) dw2) on 2n coordinates.
[[nodiscard]] RatVector courant_bracket(const LieAlgebraData& g, std::span<const Rational> u,
                                        std::span<const Rational> v);

/// The bracket on g (+) g* (basis e_1..e_n, w_1..w_n) with anchor the
/// projection onto g.
struct CourantAlgebra {
    StructureAlgebra algebra;
    std::size_t n = 0;

    /// pi: first n coordinates.
    [[nodiscard]] RatVector anchor(std::span<const Rational> u) const;
};

[[nodiscard]] CourantAlgebra courant_table(const LieAlgebraData& g);

struct CourantReport {
    PropertyReport left_leibniz;
    PropertyReport jacobi;
    PropertyReport anchor_morphism;
    bool complete = false;
};

[[nodiscard]] CourantReport courant_checks(const LieAlgebraData& g);

/// A = g* with zero product, L = g, anchor rho(X)(w) = i(X)dw, trivial action.
[[nodiscard]] LieRinehartPair courant_to_lr(const LieAlgebraData& g);

}  // namespace lrw
