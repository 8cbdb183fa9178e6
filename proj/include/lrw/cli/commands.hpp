#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lrw/cli/formats.hpp"
#include "lrw/cli/report.hpp"

namespace lrw::cli {

[[nodiscard]] Report cmd_check(const AlgebraFile& f, std::optional<Property> property);
[[nodiscard]] Report cmd_der(const AlgebraFile& f, bool with_table);
[[nodiscard]] Report cmd_full_lr(const AlgebraFile& f);
[[nodiscard]] Report cmd_poisson_lr(const AlgebraFile& f);
[[nodiscard]] Report cmd_courant(const AlgebraFile& f);
/// what: class, reeb, contact, integrable. Without a point the default
/// sample points are used.
[[nodiscard]] Report cmd_pfaff(const std::string& what, const PfaffFile& f, const std::optional<RatVector>& at);
[[nodiscard]] Report cmd_darboux(std::size_t p, std::size_t m);
/// Without p, every p in 1..n-1 and the p-contact decompositions of n.
[[nodiscard]] Report cmd_bound(std::optional<std::size_t> p, std::size_t n);
[[nodiscard]] Report cmd_corpus(const std::filesystem::path& dir);

// Building blocks shared with the corpus runner.

/// Invariants of the file's kind; failures set exit 1.
void kind_checks(const AlgebraFile& f, Report& r, const std::string& prefix = "");
/// LR axioms, associator identities and J_psi = Phi.
void pair_checks(const LieRinehartPair& p, Report& r, const std::string& prefix = "");
/// dim L = dim A - dim Z_P and [X_x, X_y] = X_{x,y}.
void poisson_law_checks(const PoissonAlgebra& P, const LieRinehartPair& p, Report& r, const std::string& prefix = "");
/// Left Leibniz, anchor morphism, completeness, Jacobi (informational) and
/// the Lie-Rinehart reading of the Courant bracket.
void courant_law_checks(const LieAlgebraData& g, Report& r, const std::string& prefix = "");
/// Diamond table with L listed first.
[[nodiscard]] StructureAlgebra lr_table(const LieRinehartPair& p);

/// Entry point: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrw::cli
