#pragma once
// Reference algebras built directly in code, independent of the file parser.

#include <cctype>
#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "lrw/algebra.hpp"
#include "lrw/lierinehart.hpp"
#include "lrw/poisson.hpp"

namespace fixtures {

struct Entry {
    const char* left;
    const char* right;
    std::vector<std::pair<lrw::Rational, const char*>> value;
};

inline lrw::StructureAlgebra build(std::vector<std::string> labels, std::initializer_list<Entry> entries) {
    lrw::StructureAlgebra a(std::move(labels));
    for (const auto& e : entries) {
        const auto i = *a.index_of(e.left);
        const auto j = *a.index_of(e.right);
        for (const auto& [c, k] : e.value) a.set_coeff(i, j, *a.index_of(k), c);
    }
    return a;
}

/// e1 unit, e3 e3 = e2.
inline lrw::StructureAlgebra dim3_unital_nil() {
    return build({"e1", "e2", "e3"}, {{"e1", "e1", {{1, "e1"}}},
                                      {"e1", "e2", {{1, "e2"}}},
                                      {"e2", "e1", {{1, "e2"}}},
                                      {"e1", "e3", {{1, "e3"}}},
                                      {"e3", "e1", {{1, "e3"}}},
                                      {"e3", "e3", {{1, "e2"}}}});
}

/// dim 2 case 1: e1 unit, e2 e2 = e2.
inline lrw::StructureAlgebra dim2_case1() {
    return build({"e1", "e2"}, {{"e1", "e1", {{1, "e1"}}}, {"e1", "e2", {{1, "e2"}}},
                                {"e2", "e1", {{1, "e2"}}}, {"e2", "e2", {{1, "e2"}}}});
}

/// dim 2 case 2: e1 unit, e2 e2 = 0.
inline lrw::StructureAlgebra dim2_case2() {
    return build({"e1", "e2"}, {{"e1", "e1", {{1, "e1"}}}, {"e1", "e2", {{1, "e2"}}}, {"e2", "e1", {{1, "e2"}}}});
}

/// dim 2 case 3: e1 e1 = e2.
inline lrw::StructureAlgebra dim2_case3() { return build({"e1", "e2"}, {{"e1", "e1", {{1, "e2"}}}}); }

/// dim 2 case 4: e1 e1 = e1.
inline lrw::StructureAlgebra dim2_case4() { return build({"e1", "e2"}, {{"e1", "e1", {{1, "e1"}}}}); }

/// O_n: all products zero.
inline lrw::StructureAlgebra zero_algebra(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return lrw::StructureAlgebra(labels);
}

/// dim 3: e1 unit, all other products zero.
inline lrw::StructureAlgebra dim3_unital_zero() {
    return build({"e1", "e2", "e3"}, {{"e1", "e1", {{1, "e1"}}},
                                      {"e1", "e2", {{1, "e2"}}},
                                      {"e2", "e1", {{1, "e2"}}},
                                      {"e1", "e3", {{1, "e3"}}},
                                      {"e3", "e1", {{1, "e3"}}}});
}

/// {e1, e2} = e2 on O_2.
inline lrw::PoissonAlgebra poisson_case5() {
    auto br = build({"e1", "e2"}, {{"e1", "e2", {{1, "e2"}}}, {"e2", "e1", {{-1, "e2"}}}});
    return {zero_algebra(2), br};
}

/// {e2, e3} = e3 on the dim3_unital_zero algebra.
inline lrw::PoissonAlgebra poisson_dim3() {
    auto br = build({"e1", "e2", "e3"}, {{"e2", "e3", {{1, "e3"}}}, {"e3", "e2", {{-1, "e3"}}}});
    return {dim3_unital_zero(), br};
}

/// [e1, e2] = e2.
inline lrw::StructureAlgebra solvable2() {
    return build({"e1", "e2"}, {{"e1", "e2", {{1, "e2"}}}, {"e2", "e1", {{-1, "e2"}}}});
}

/// [e1, e2] = e3.
inline lrw::StructureAlgebra heisenberg3() {
    return build({"e1", "e2", "e3"}, {{"e1", "e2", {{1, "e3"}}}, {"e2", "e1", {{-1, "e3"}}}});
}

/// gl(n) in the elementary basis E_ij (e_j -> e_i), labels X1..X(n^2) row-major.
inline lrw::StructureAlgebra gl(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n * n; ++i) labels.push_back("X" + std::to_string(i));
    lrw::StructureAlgebra a(labels);
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const std::size_t left = i * n + j, right = k * n + l;
                    if (j == k) a.set_coeff(left, right, i * n + l, a.coeff(left, right, i * n + l) + 1);
                    if (l == i) a.set_coeff(left, right, k * n + j, a.coeff(left, right, k * n + j) - 1);
                }
    return a;
}

/// Linear map on the basis e1..en from (source, target, coeff) images.
inline lrw::LinearMap map(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, lrw::Rational>> images) {
    lrw::LinearMap m = lrw::LinearMap::zero(n);
    for (const auto& [src, dst, c] : images) m.matrix(dst - 1, src - 1) = c;
    return m;
}

}  // namespace fixtures

namespace fixtures {

/// Parses "2e2", "-X1+X4", "1/2 e3", "0" into coordinates over `labels`.
inline lrw::RatVector lincomb(const std::vector<std::string>& labels, const std::string& text) {
    lrw::RatVector out(labels.size());
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    skip();
    if (text.substr(pos) == "0") return out;
    while (pos < text.size()) {
        skip();
        lrw::Rational sign(1);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = lrw::Rational(-1);
            ++pos;
            skip();
        }
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        lrw::Rational coef = pos > start ? lrw::Rational::parse(text.substr(start, pos - start)) : lrw::Rational(1);
        skip();
        start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        const auto name = text.substr(start, pos - start);
        std::size_t k = 0;
        while (k < labels.size() && labels[k] != name) ++k;
        if (k == labels.size()) throw std::invalid_argument("unknown label in fixture: " + name);
        out[k] += sign * coef;
        skip();
    }
    return out;
}

/// Multiplication table in row-times-column form, one string per entry.
inline lrw::StructureAlgebra table(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& rows) {
    lrw::StructureAlgebra a(labels);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) a.set_product(i, j, lincomb(labels, rows[i][j]));
    return a;
}

/// Diamond table of `p` after renaming L to the given derivations (located
/// through the anchor), listed in `order`.
inline lrw::StructureAlgebra named_table(const lrw::LieRinehartPair& p,
                                         const std::vector<std::pair<std::string, lrw::LinearMap>>& named,
                                         const std::vector<std::string>& order) {
    std::vector<lrw::RatVector> cols;
    std::vector<std::string> names;
    for (const auto& [name, m] : named) {
        auto pre = lrw::anchor_preimage(p, m);
        if (!pre) throw std::invalid_argument("not in the anchor image: " + name);
        cols.push_back(*pre);
        names.push_back(name);
    }
    const auto q = lrw::change_l_basis(p, lrw::RatMatrix::from_columns(cols, p.dim_l()), names);
    return lrw::diamond_table(q).algebra.reordered(order);
}

}  // namespace fixtures
