#pragma once
// Text formats for algebras (.alg) and Pfaff systems (.pfaff).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrw/courant.hpp"
#include "lrw/pfaff.hpp"
#include "lrw/poisson.hpp"

namespace lrw::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// c label, merged per label in order of first appearance, no zero terms.
struct Term {
    Rational coef;
    std::string label;
    friend bool operator==(const Term&, const Term&) = default;
};
using LinComb = std::vector<Term>;

[[nodiscard]] RatVector to_vector(const LinComb& c, const std::vector<std::string>& labels);
[[nodiscard]] LinComb from_vector(std::span<const Rational> v, const std::vector<std::string>& labels);
/// "0", "e1", "-2 e2 + 1/2 e3".
[[nodiscard]] std::string format_lincomb(const LinComb& c);

enum class AlgebraKind { algebra, lie, poisson, liealg_dual };

[[nodiscard]] std::string_view to_string(AlgebraKind k);

struct ProductLine {
    std::string left;
    std::string right;
    LinComb value;
    friend bool operator==(const ProductLine&, const ProductLine&) = default;
};

/// Named basis element of a table: either a linear map on A given by images of basis
/// vectors (`X maps e2 -> 2 e2, e3 -> e3`) or a combination of the table's
/// own basis (`v1 is e1`).
struct MapEntry {
    std::string name;
    bool is_map = true;
    std::vector<std::pair<std::string, LinComb>> images;
    LinComb combination;
    friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

/// Expected multiplication table, row times column.
struct TableBlock {
    std::string kind;                  ///< full-lr, sub-lr, poisson-lr, courant
    std::vector<std::string> span;     ///< sub-lr only: basis-map names spanning L
    std::vector<std::string> columns;
    std::vector<std::vector<LinComb>> rows;  ///< rows in column order
    friend bool operator==(const TableBlock&, const TableBlock&) = default;
};

struct AlgebraFile {
    AlgebraKind kind = AlgebraKind::algebra;
    std::vector<std::string> basis;
    std::vector<std::string> dual;
    std::vector<ProductLine> products;
    std::vector<ProductLine> brackets;
    std::vector<MapEntry> basis_map;
    std::optional<std::size_t> der_dim;
    std::vector<TableBlock> tables;

    [[nodiscard]] StructureAlgebra product_algebra() const;
    [[nodiscard]] StructureAlgebra bracket_algebra() const;
    [[nodiscard]] PoissonAlgebra poisson() const;
    /// Throws std::invalid_argument when the bracket is not a Lie bracket.
    [[nodiscard]] LieAlgebraData lie() const;
    /// The structure the kind is about: products for `algebra`, brackets otherwise.
    [[nodiscard]] StructureAlgebra primary() const;

    friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

[[nodiscard]] AlgebraFile parse_algebra(std::string_view text);
[[nodiscard]] std::string render(const AlgebraFile& f);

struct NamedForm {
    std::string name;
    PolyForm form;
    friend bool operator==(const NamedForm&, const NamedForm&) = default;
};

struct PfaffFile {
    VarList vars;
    std::vector<NamedForm> forms;
    /// `expect key value...` lines, kept verbatim after the key.
    std::vector<std::pair<std::string, std::string>> expectations;

    [[nodiscard]] PfaffSystem system() const;
    friend bool operator==(const PfaffFile&, const PfaffFile&) = default;
};

[[nodiscard]] PfaffFile parse_pfaff(std::string_view text);
[[nodiscard]] std::string render(const PfaffFile& f);
/// Monomial-by-monomial rendering accepted back by parse_pfaff.
[[nodiscard]] std::string format_form(const PolyForm& f);

/// "0,1/2,-3" (commas or spaces).
[[nodiscard]] RatVector parse_point(std::string_view text);
[[nodiscard]] std::string format_point(std::span<const Rational> p);

}  // namespace lrw::cli
