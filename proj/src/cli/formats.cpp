#include "lrw/cli/formats.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace lrw::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

RatVector to_vector(const LinComb& c, const std::vector<std::string>& labels) {
    RatVector v(labels.size());
    for (const auto& t : c) {
        auto it = std::find(labels.begin(), labels.end(), t.label);
        if (it == labels.end()) throw std::invalid_argument("unknown label '" + t.label + "'");
        v[static_cast<std::size_t>(it - labels.begin())] += t.coef;
    }
    return v;
}

LinComb from_vector(std::span<const Rational> v, const std::vector<std::string>& labels) {
    LinComb out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({v[i], labels.at(i)});
    return out;
}

std::string format_lincomb(const LinComb& c) {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& [coef, label] = c[i];
        const Rational mag = coef.sign() < 0 ? -coef : coef;
        if (i == 0) s += coef.sign() < 0 ? "-" : "";
        else s += coef.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) s += mag.str() + " ";
        s += label;
    }
    return s;
}

std::string_view to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::algebra: return "algebra";
        case AlgebraKind::lie: return "lie";
        case AlgebraKind::poisson: return "poisson";
        case AlgebraKind::liealg_dual: return "liealg-dual";
    }
    return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
    enum Kind { ident, number, symbol, end } kind = end;
    std::string text;
    std::size_t column = 0;
};

// Tokenizer for one line. Keywords may contain '-', so they are read as
// whitespace-delimited words; everything else goes through next().
class Lexer {
public:
    Lexer(std::string_view line, std::size_t lineno) : s_(line), lineno_(lineno) {}

    [[noreturn]] void fail(std::size_t column, const std::string& msg) const { throw ParseError(lineno_, column, msg); }
    [[noreturn]] void fail(const std::string& msg) const { fail(pos_ + 1, msg); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    std::size_t column() {
        skip();
        return pos_ + 1;
    }

    std::string word() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("unexpected end of line");
        return std::string(s_.substr(start, pos_ - start));
    }

    Token peek() {
        const std::size_t save = pos_;
        Token t = next();
        pos_ = save;
        return t;
    }

    Token next() {
        skip();
        Token t;
        t.column = pos_ + 1;
        if (pos_ >= s_.size()) return t;
        const char c = s_[pos_];
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            t.kind = Token::ident;
            t.text = s_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail(pos_ + 1, "expected denominator");
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            if (pos_ < s_.size() && ident_start(s_[pos_])) fail(pos_ + 1, "missing space or '*' after number");
            t.kind = Token::number;
            t.text = s_.substr(start, pos_ - start);
        } else if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            t.kind = Token::symbol;
            t.text = "->";
        } else if (std::string_view("+-*|,=^").find(c) != std::string_view::npos) {
            ++pos_;
            t.kind = Token::symbol;
            t.text = std::string(1, c);
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        return t;
    }

    Token expect_ident(const char* what) {
        Token t = next();
        if (t.kind != Token::ident) fail(t.column, std::string("expected ") + what);
        return t;
    }
    void expect_symbol(const char* sym) {
        Token t = next();
        if (t.kind != Token::symbol || t.text != sym) fail(t.column, std::string("expected '") + sym + "'");
    }
    void expect_end() {
        Token t = next();
        if (t.kind != Token::end) fail(t.column, "unexpected '" + t.text + "'");
    }
    std::size_t lineno() const { return lineno_; }

private:
    std::string_view s_;
    std::size_t lineno_;
    std::size_t pos_ = 0;
};

Rational number_of(Lexer& lx, const Token& t) {
    try {
        return Rational::parse(t.text);
    } catch (const std::exception& e) {
        lx.fail(t.column, e.what());
    }
}

std::size_t count_of(Lexer& lx) {
    const std::size_t col = lx.column();
    const std::string w = lx.word();
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        lx.fail(col, "expected a non-negative integer");
    return static_cast<std::size_t>(std::stoul(w));
}

// Reads a linear combination up to one of `stops` (or end of line).
LinComb lincomb(Lexer& lx, const std::vector<std::string>& allowed, const std::string& stops = "") {
    LinComb out;
    auto add = [&](const Rational& c, const std::string& label) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Term& t) { return t.label == label; });
        if (it == out.end()) out.push_back({c, label});
        else it->coef += c;
    };
    auto at_stop = [&](const Token& t) {
        return t.kind == Token::end || (t.kind == Token::symbol && stops.find(t.text[0]) != std::string::npos &&
                                        t.text.size() == 1);
    };
    Token t = lx.peek();
    if (t.kind == Token::number && t.text == "0") {
        lx.next();
        if (!at_stop(lx.peek())) lx.fail(lx.peek().column, "unexpected term after 0");
        return out;
    }
    bool first = true;
    while (true) {
        t = lx.peek();
        if (at_stop(t)) {
            if (first) lx.fail(t.column, "expected a linear combination");
            break;
        }
        Rational sign(1);
        if (t.kind == Token::symbol && (t.text == "+" || t.text == "-")) {
            lx.next();
            if (t.text == "-") sign = Rational(-1);
            t = lx.peek();
        } else if (!first) {
            lx.fail(t.column, "expected '+' or '-'");
        }
        Rational coef(1);
        if (t.kind == Token::number) {
            lx.next();
            coef = number_of(lx, t);
            if (lx.peek().kind == Token::symbol && lx.peek().text == "*") lx.next();
        }
        Token label = lx.expect_ident("a basis label");
        if (std::find(allowed.begin(), allowed.end(), label.text) == allowed.end())
            lx.fail(label.column, "unknown basis label '" + label.text + "'");
        add(sign * coef, label.text);
        first = false;
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coef.is_zero(); }), out.end());
    return out;
}

std::vector<std::string> label_list(Lexer& lx, const char* what) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    while (!lx.at_end()) {
        Token t = lx.expect_ident(what);
        if (!seen.insert(t.text).second) lx.fail(t.column, "duplicate label '" + t.text + "'");
        out.push_back(t.text);
    }
    if (out.empty()) lx.fail("expected at least one label");
    return out;
}

std::vector<std::pair<std::size_t, std::string>> split_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t lineno = 0, start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        ++lineno;
        std::string line(text.substr(start, stop - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        out.emplace_back(lineno, line);
        if (stop == text.size()) break;
        start = stop + 1;
    }
    return out;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

// ---------------------------------------------------------------------------

namespace {

StructureAlgebra build_table(const std::vector<std::string>& labels, const std::vector<ProductLine>& lines) {
    StructureAlgebra a(labels);
    auto index = [&](const std::string& l) { return *a.index_of(l); };
    for (const auto& p : lines) a.set_product(index(p.left), index(p.right), to_vector(p.value, labels));
    return a;
}

}  // namespace

StructureAlgebra AlgebraFile::product_algebra() const { return build_table(basis, products); }
StructureAlgebra AlgebraFile::bracket_algebra() const { return build_table(basis, brackets); }
PoissonAlgebra AlgebraFile::poisson() const { return {product_algebra(), bracket_algebra()}; }
LieAlgebraData AlgebraFile::lie() const { return LieAlgebraData(bracket_algebra(), dual); }
StructureAlgebra AlgebraFile::primary() const {
    return kind == AlgebraKind::algebra ? product_algebra() : bracket_algebra();
}

AlgebraFile parse_algebra(std::string_view text) {
    AlgebraFile f;
    bool have_kind = false;
    std::optional<std::size_t> dim;
    std::size_t dim_line = 0;
    std::set<std::pair<std::string, std::string>> seen_prod, seen_bracket;
    std::set<std::string> map_names;

    enum class Block { none, basis_map, table } block = Block::none;
    std::size_t block_line = 0;

    auto require_basis = [&](Lexer& lx) {
        if (f.basis.empty()) lx.fail(1, "'basis' must come first");
    };
    auto table_labels = [&] {
        auto all = f.basis;
        all.insert(all.end(), f.dual.begin(), f.dual.end());
        return all;
    };

    for (const auto& [lineno, line] : split_lines(text)) {
        if (blank(line)) continue;
        Lexer lx(line, lineno);
        const std::size_t kwcol = lx.column();
        const std::string kw = lx.word();

        if (block == Block::basis_map) {
            if (kw == "end") {
                lx.expect_end();
                block = Block::none;
                continue;
            }
            Lexer lx2(line, lineno);
            Token name = lx2.expect_ident("a basis-map name");
            if (!map_names.insert(name.text).second) lx2.fail(name.column, "duplicate basis-map name '" + name.text + "'");
            MapEntry e;
            e.name = name.text;
            const std::size_t col = lx2.column();
            const std::string how = lx2.word();
            if (how == "maps") {
                std::set<std::string> sources;
                while (true) {
                    Token src = lx2.expect_ident("a basis label");
                    if (std::find(f.basis.begin(), f.basis.end(), src.text) == f.basis.end())
                        lx2.fail(src.column, "unknown basis label '" + src.text + "'");
                    if (!sources.insert(src.text).second) lx2.fail(src.column, "image of '" + src.text + "' given twice");
                    lx2.expect_symbol("->");
                    e.images.emplace_back(src.text, lincomb(lx2, f.basis, ","));
                    Token sep = lx2.next();
                    if (sep.kind == Token::end) break;
                    if (sep.text != ",") lx2.fail(sep.column, "expected ','");
                }
            } else if (how == "is") {
                e.is_map = false;
                e.combination = lincomb(lx2, table_labels());
                lx2.expect_end();
            } else {
                lx2.fail(col, "expected 'maps' or 'is'");
            }
            f.basis_map.push_back(std::move(e));
            continue;
        }

        if (block == Block::table) {
            auto& t = f.tables.back();
            if (kw == "end") {
                lx.expect_end();
                if (t.columns.empty()) lx.fail(kwcol, "table without columns");
                if (t.rows.size() != t.columns.size())
                    lx.fail(kwcol, "table has " + std::to_string(t.rows.size()) + " rows for " +
                                       std::to_string(t.columns.size()) + " columns");
                block = Block::none;
            } else if (kw == "span") {
                if (t.kind != "sub-lr") lx.fail(kwcol, "'span' only applies to sub-lr tables");
                t.span = label_list(lx, "a basis-map name");
                for (const auto& s : t.span)
                    if (!map_names.count(s)) lx.fail(kwcol, "'" + s + "' is not in the basis-map");
            } else if (kw == "columns") {
                if (!t.columns.empty()) lx.fail(kwcol, "columns given twice");
                t.columns = label_list(lx, "a column label");
            } else if (kw == "row") {
                if (t.columns.empty()) lx.fail(kwcol, "'columns' must precede rows");
                Token name = lx.expect_ident("a row label");
                if (t.rows.size() >= t.columns.size() || name.text != t.columns[t.rows.size()])
                    lx.fail(name.column, "rows must follow the column order");
                std::vector<LinComb> cells;
                while (true) {
                    lx.expect_symbol("|");
                    cells.push_back(lincomb(lx, t.columns, "|"));
                    if (lx.peek().kind == Token::end) break;
                }
                if (cells.size() != t.columns.size())
                    lx.fail(kwcol, "row has " + std::to_string(cells.size()) + " cells for " +
                                       std::to_string(t.columns.size()) + " columns");
                t.rows.push_back(std::move(cells));
            } else {
                lx.fail(kwcol, "unexpected '" + kw + "' inside table");
            }
            continue;
        }

        if (kw == "kind") {
            if (have_kind) lx.fail(kwcol, "kind given twice");
            const std::size_t col = lx.column();
            const std::string k = lx.word();
            if (k == "algebra") f.kind = AlgebraKind::algebra;
            else if (k == "lie") f.kind = AlgebraKind::lie;
            else if (k == "poisson") f.kind = AlgebraKind::poisson;
            else if (k == "liealg-dual") f.kind = AlgebraKind::liealg_dual;
            else lx.fail(col, "unknown kind '" + k + "'");
            lx.expect_end();
            have_kind = true;
        } else if (kw == "dim") {
            if (dim) lx.fail(kwcol, "dim given twice");
            dim = count_of(lx);
            dim_line = lineno;
            lx.expect_end();
        } else if (kw == "basis") {
            if (!f.basis.empty()) lx.fail(kwcol, "basis given twice");
            f.basis = label_list(lx, "a basis label");
        } else if (kw == "dual") {
            if (!f.dual.empty()) lx.fail(kwcol, "dual given twice");
            require_basis(lx);
            f.dual = label_list(lx, "a dual label");
            for (const auto& d : f.dual)
                if (std::find(f.basis.begin(), f.basis.end(), d) != f.basis.end())
                    lx.fail(kwcol, "dual label '" + d + "' clashes with the basis");
        } else if (kw == "prod" || kw == "bracket") {
            require_basis(lx);
            ProductLine p;
            Token l = lx.expect_ident("a basis label");
            Token r = lx.expect_ident("a basis label");
            for (const auto& t : {l, r})
                if (std::find(f.basis.begin(), f.basis.end(), t.text) == f.basis.end())
                    lx.fail(t.column, "unknown basis label '" + t.text + "'");
            lx.expect_symbol("->");
            p.left = l.text;
            p.right = r.text;
            p.value = lincomb(lx, f.basis);
            auto& seen = kw == "prod" ? seen_prod : seen_bracket;
            if (!seen.insert({p.left, p.right}).second)
                lx.fail(kwcol, "duplicate " + kw + " line for " + p.left + " " + p.right);
            (kw == "prod" ? f.products : f.brackets).push_back(std::move(p));
        } else if (kw == "basis-map") {
            require_basis(lx);
            lx.expect_end();
            if (!f.basis_map.empty()) lx.fail(kwcol, "basis-map given twice");
            block = Block::basis_map;
            block_line = lineno;
        } else if (kw == "expect") {
            const std::size_t col = lx.column();
            const std::string what = lx.word();
            if (what != "der-dim") lx.fail(col, "unknown expectation '" + what + "'");
            if (f.der_dim) lx.fail(col, "der-dim given twice");
            f.der_dim = count_of(lx);
            lx.expect_end();
        } else if (kw == "table") {
            require_basis(lx);
            const std::size_t col = lx.column();
            TableBlock t;
            t.kind = lx.word();
            if (t.kind != "full-lr" && t.kind != "sub-lr" && t.kind != "poisson-lr" && t.kind != "courant")
                lx.fail(col, "unknown table kind '" + t.kind + "'");
            lx.expect_end();
            f.tables.push_back(std::move(t));
            block = Block::table;
            block_line = lineno;
        } else {
            lx.fail(kwcol, "unknown keyword '" + kw + "'");
        }
    }

    if (block != Block::none) throw ParseError(block_line, 1, "block is missing 'end'");
    if (!have_kind) throw ParseError(1, 1, "missing 'kind'");
    if (f.basis.empty()) throw ParseError(1, 1, "missing 'basis'");
    if (dim && *dim != f.basis.size())
        throw ParseError(dim_line, 1, "dim " + std::to_string(*dim) + " does not match " +
                                          std::to_string(f.basis.size()) + " basis labels");
    const bool wants_prod = f.kind == AlgebraKind::algebra || f.kind == AlgebraKind::poisson;
    const bool wants_bracket = f.kind != AlgebraKind::algebra;
    if (!wants_prod && !f.products.empty()) throw ParseError(1, 1, "'prod' lines need kind algebra or poisson");
    if (!wants_bracket && !f.brackets.empty()) throw ParseError(1, 1, "'bracket' lines need kind lie, poisson or liealg-dual");
    if (!f.dual.empty() && f.kind != AlgebraKind::liealg_dual && f.kind != AlgebraKind::lie)
        throw ParseError(1, 1, "'dual' needs kind lie or liealg-dual");
    if (!f.dual.empty() && f.dual.size() != f.basis.size())
        throw ParseError(1, 1, "dual basis must have as many labels as the basis");
    return f;
}

std::string render(const AlgebraFile& f) {
    std::ostringstream os;
    os << "kind " << to_string(f.kind) << "\n";
    os << "dim " << f.basis.size() << "\n";
    os << "basis";
    for (const auto& b : f.basis) os << ' ' << b;
    os << "\n";
    if (!f.dual.empty()) {
        os << "dual";
        for (const auto& b : f.dual) os << ' ' << b;
        os << "\n";
    }
    for (const auto& p : f.products) os << "prod " << p.left << ' ' << p.right << " -> " << format_lincomb(p.value) << "\n";
    for (const auto& p : f.brackets) os << "bracket " << p.left << ' ' << p.right << " -> " << format_lincomb(p.value) << "\n";
    if (!f.basis_map.empty()) {
        os << "basis-map\n";
        for (const auto& e : f.basis_map) {
            os << "  " << e.name;
            if (e.is_map) {
                os << " maps";
                for (std::size_t i = 0; i < e.images.size(); ++i)
                    os << (i ? ", " : " ") << e.images[i].first << " -> " << format_lincomb(e.images[i].second);
            } else {
                os << " is " << format_lincomb(e.combination);
            }
            os << "\n";
        }
        os << "end\n";
    }
    if (f.der_dim) os << "expect der-dim " << *f.der_dim << "\n";
    for (const auto& t : f.tables) {
        os << "table " << t.kind << "\n";
        if (!t.span.empty()) {
            os << "  span";
            for (const auto& s : t.span) os << ' ' << s;
            os << "\n";
        }
        os << "  columns";
        for (const auto& c : t.columns) os << ' ' << c;
        os << "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            os << "  row " << t.columns[r];
            for (const auto& cell : t.rows[r]) os << " | " << format_lincomb(cell);
            os << "\n";
        }
        os << "end\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

PfaffSystem PfaffFile::system() const {
    std::vector<std::string> names;
    std::vector<PolyForm> fs;
    for (const auto& f : forms) {
        names.push_back(f.name);
        fs.push_back(f.form);
    }
    return PfaffSystem(vars, names, fs);
}

namespace {

PolyForm form_expr(Lexer& lx, const VarList& vars) {
    const std::size_t n = vars.size();
    PolyForm out(vars, 1);
    auto var_index = [&](const std::string& s) -> std::optional<std::size_t> {
        auto it = std::find(vars.begin(), vars.end(), s);
        if (it == vars.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vars.begin());
    };
    Token t = lx.peek();
    if (t.kind == Token::number && t.text == "0") {
        lx.next();
        lx.expect_end();
        return out;
    }
    bool first = true;
    while (!lx.at_end()) {
        t = lx.peek();
        Rational coef(1);
        if (t.kind == Token::symbol && (t.text == "+" || t.text == "-")) {
            lx.next();
            if (t.text == "-") coef = Rational(-1);
        } else if (!first) {
            lx.fail(t.column, "expected '+' or '-'");
        }
        Poly p = Poly::constant(n, Rational(1));
        std::optional<std::size_t> diff;
        const std::size_t term_col = lx.column();
        while (true) {
            Token f = lx.next();
            if (f.kind == Token::number) {
                coef *= number_of(lx, f);
            } else if (f.kind == Token::ident) {
                if (auto v = var_index(f.text)) {
                    unsigned power = 1;
                    if (lx.peek().kind == Token::symbol && lx.peek().text == "^") {
                        lx.next();
                        Token e = lx.next();
                        if (e.kind != Token::number || e.text.find('/') != std::string::npos)
                            lx.fail(e.column, "expected an integer exponent");
                        power = static_cast<unsigned>(std::stoul(e.text));
                    }
                    for (unsigned k = 0; k < power; ++k) p = p * Poly::variable(n, *v);
                } else if (f.text.size() > 1 && f.text[0] == 'd' && var_index(f.text.substr(1))) {
                    if (diff) lx.fail(f.column, "a term of a 1-form takes exactly one differential");
                    diff = var_index(f.text.substr(1));
                } else {
                    const std::string name = f.text.size() > 1 && f.text[0] == 'd' ? f.text.substr(1) : f.text;
                    lx.fail(f.column, "undeclared variable '" + name + "'");
                }
            } else {
                lx.fail(f.column, "expected a number, variable or differential");
            }
            if (lx.peek().kind == Token::symbol && lx.peek().text == "*") {
                lx.next();
                continue;
            }
            break;
        }
        if (!diff) lx.fail(term_col, "term has no differential");
        out.add({*diff}, coef * p);
        first = false;
    }
    if (first) lx.fail("expected a 1-form");
    return out;
}

}  // namespace

PfaffFile parse_pfaff(std::string_view text) {
    PfaffFile f;
    std::set<std::string> names;
    for (const auto& [lineno, line] : split_lines(text)) {
        if (blank(line)) continue;
        Lexer lx(line, lineno);
        const std::size_t kwcol = lx.column();
        const std::string kw = lx.word();
        if (kw == "vars") {
            if (!f.vars.empty()) lx.fail(kwcol, "vars given twice");
            f.vars = label_list(lx, "a variable name");
            for (const auto& v : f.vars)
                if (v.size() > 1 && v[0] == 'd' &&
                    std::find(f.vars.begin(), f.vars.end(), v.substr(1)) != f.vars.end())
                    lx.fail(kwcol, "variable '" + v + "' reads as a differential");
        } else if (kw == "form") {
            if (f.vars.empty()) lx.fail(kwcol, "'vars' must come first");
            Token name = lx.expect_ident("a form name");
            if (!names.insert(name.text).second) lx.fail(name.column, "duplicate form '" + name.text + "'");
            lx.expect_symbol("=");
            f.forms.push_back({name.text, form_expr(lx, f.vars)});
        } else if (kw == "expect") {
            const std::size_t col = lx.column();
            const std::string key = lx.word();
            if (key != "class" && key != "reeb" && key != "contact" && key != "integrable")
                lx.fail(col, "unknown expectation '" + key + "'");
            std::string rest;
            while (!lx.at_end()) rest += (rest.empty() ? "" : " ") + lx.word();
            if (rest.empty()) lx.fail("expectation needs a value");
            f.expectations.emplace_back(key, rest);
        } else {
            lx.fail(kwcol, "unknown keyword '" + kw + "'");
        }
    }
    if (f.vars.empty()) throw ParseError(1, 1, "missing 'vars'");
    if (f.forms.empty()) throw ParseError(1, 1, "no forms");
    return f;
}

std::string format_form(const PolyForm& f) {
    std::string out;
    for (const auto& [idx, poly] : f.terms()) {
        std::string basis;
        for (std::size_t i = 0; i < idx.size(); ++i) basis += (i ? "^d" : "d") + f.vars()[idx[i]];
        for (const auto& [mono, c] : poly.terms()) {
            const Rational mag = c.sign() < 0 ? -c : c;
            out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            if (mag != Rational(1)) out += mag.str() + "*";
            for (std::size_t v = 0; v < mono.size(); ++v) {
                if (mono[v] == 0) continue;
                out += f.vars()[v];
                if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
                out += "*";
            }
            out += basis;
        }
    }
    return out.empty() ? "0" : out;
}

std::string render(const PfaffFile& f) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : f.vars) os << ' ' << v;
    os << "\n";
    for (const auto& nf : f.forms) os << "form " << nf.name << " = " << format_form(nf.form) << "\n";
    for (const auto& [k, v] : f.expectations) os << "expect " << k << ' ' << v << "\n";
    return os.str();
}

RatVector parse_point(std::string_view text) {
    RatVector out;
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::string item;
    while (is >> item) out.push_back(Rational::parse(item));
    if (out.empty()) throw std::invalid_argument("empty point");
    return out;
}

std::string format_point(std::span<const Rational> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
    return s + ")";
}

}  // namespace lrw::cli
