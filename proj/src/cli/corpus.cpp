#include <algorithm>
#include <fstream>
#include <sstream>

#include "lrw/cli/commands.hpp"
#include "lrw/courant.hpp"
#include "lrw/lierinehart.hpp"
#include "lrw/pfaff.hpp"
#include "lrw/poisson.hpp"

namespace lrw::cli {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.generic_string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const MapEntry* find_entry(const AlgebraFile& f, const std::string& name) {
    for (const auto& e : f.basis_map)
        if (e.name == name) return &e;
    return nullptr;
}

LinearMap map_of(const AlgebraFile& f, const MapEntry& e) {
    const std::size_t n = f.basis.size();
    LinearMap m = LinearMap::zero(n);
    for (const auto& [src, img] : e.images) {
        const std::size_t j = static_cast<std::size_t>(std::find(f.basis.begin(), f.basis.end(), src) - f.basis.begin());
        const auto v = to_vector(img, f.basis);
        for (std::size_t i = 0; i < n; ++i) m.matrix(i, j) = v[i];
    }
    return m;
}

StructureAlgebra expected_table(const TableBlock& t) {
    StructureAlgebra a(t.columns);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) a.set_product(i, j, to_vector(t.rows[i][j], t.columns));
    return a;
}

/// Empty when equal, otherwise the first differing cell.
std::string table_diff(const StructureAlgebra& got, const StructureAlgebra& want) {
    for (std::size_t i = 0; i < want.dim(); ++i)
        for (std::size_t j = 0; j < want.dim(); ++j) {
            const auto g = got.product(i, j), w = want.product(i, j);
            if (g != w)
                return "row " + want.label(i) + " column " + want.label(j) + ": expected " +
                       format_lincomb(from_vector(w, want.labels())) + ", got " +
                       format_lincomb(from_vector(g, want.labels()));
        }
    return "";
}

/// The pair named by an LR table, with L renamed to the table's columns.
LieRinehartPair table_pair(const AlgebraFile& f, const TableBlock& t) {
    const auto a = f.product_algebra();
    std::optional<LieRinehartPair> p;
    if (t.kind == "full-lr") {
        p = full_lie_rinehart(a);
    } else if (t.kind == "poisson-lr") {
        p = poisson_to_lr(f.poisson());
    } else {
        std::vector<RatVector> flats;
        std::vector<std::string> tmp;
        for (const auto& name : t.span) {
            flats.push_back(map_of(f, *find_entry(f, name)).flat());
            tmp.push_back("L" + std::to_string(tmp.size() + 1));
        }
        const auto span = Subspace::span(a.dim() * a.dim(), flats);
        tmp.resize(span.dim());
        p = restrict_lie_rinehart(a, span, tmp);
    }
    std::vector<std::string> names;
    std::vector<RatVector> cols;
    for (const auto& c : t.columns) {
        if (std::find(f.basis.begin(), f.basis.end(), c) != f.basis.end()) continue;
        const MapEntry* e = find_entry(f, c);
        if (!e || !e->is_map) throw std::invalid_argument("column " + c + " has no derivation in the basis-map");
        auto pre = anchor_preimage(*p, map_of(f, *e));
        if (!pre) throw std::invalid_argument(c + " is not in L");
        names.push_back(c);
        cols.push_back(*pre);
    }
    if (names.size() != p->dim_l())
        throw std::invalid_argument("table names " + std::to_string(names.size()) + " elements of L, dim L = " +
                                    std::to_string(p->dim_l()));
    return change_l_basis(*p, RatMatrix::from_columns(cols, p->dim_l()), names);
}

StructureAlgebra courant_in_table_basis(const AlgebraFile& f, const TableBlock& t) {
    const auto c = courant_table(f.lie()).algebra;
    std::vector<RatVector> cols;
    for (const auto& name : t.columns) {
        if (auto idx = c.index_of(name)) {
            cols.push_back(unit_vector(c.dim(), *idx));
            continue;
        }
        const MapEntry* e = find_entry(f, name);
        if (!e || e->is_map) throw std::invalid_argument("column " + name + " has no 'is' entry in the basis-map");
        cols.push_back(to_vector(e->combination, c.labels()));
    }
    return c.change_basis(RatMatrix::from_columns(cols, c.dim()), t.columns);
}

void verify_table(const AlgebraFile& f, const TableBlock& t, Report& r, const std::string& prefix) {
    const std::string name = prefix + "table " + t.kind;
    try {
        StructureAlgebra got;
        if (t.kind == "courant") {
            got = courant_in_table_basis(f, t);
        } else {
            const auto p = table_pair(f, t);
            if (t.kind == "sub-lr") pair_checks(p, r, prefix + "sub-lr ");
            got = diamond_table(p).algebra.reordered(t.columns);
        }
        const auto diff = table_diff(got, expected_table(t));
        r.result(name, diff.empty() ? Json("match") : Json(diff), diff.empty());
    } catch (const std::exception& e) {
        r.result(name, e.what(), false);
    }
}

void verify_algebra(const std::string& file, const std::string& text, Report& r) {
    const std::string pre = file + ": ";
    AlgebraFile f;
    try {
        f = parse_algebra(text);
    } catch (const ParseError& e) {
        r.result(pre + "parse", e.what(), false);
        return;
    }
    kind_checks(f, r, pre);
    bool same = false;
    try {
        same = parse_algebra(render(f)) == f;
    } catch (const ParseError&) {
    }
    r.result(pre + "round-trip", same, same);

    if (f.der_dim) {
        const bool has_prod = f.kind == AlgebraKind::algebra || f.kind == AlgebraKind::poisson;
        const auto d = derivations(has_prod ? f.product_algebra() : f.bracket_algebra()).dim();
        r.result(pre + "dim Der(A)", std::to_string(d) + " (expected " + std::to_string(*f.der_dim) + ")",
                 d == *f.der_dim);
    }
    if (f.kind == AlgebraKind::algebra) {
        const auto a = f.product_algebra();
        if (check_property(a, Property::associative) && check_property(a, Property::commutative)) {
            const auto full = full_lie_rinehart(a);
            pair_checks(full, r, pre + "full-lr ");
            r.check(pre + "module closure of Der(A)", module_closure_check(a, derivations(a).space));
        }
    } else if (f.kind == AlgebraKind::poisson) {
        const auto P = f.poisson();
        if (check_poisson(P)) {
            try {
                const auto p = poisson_to_lr(P);
                poisson_law_checks(P, p, r, pre + "poisson-lr ");
                pair_checks(p, r, pre + "poisson-lr ");
            } catch (const ConstructionError& e) {
                r.result(pre + "poisson-lr", e.what(), false);
            }
        }
    } else {
        const auto g = f.bracket_algebra();
        if (check_property(g, Property::anticommutative) && check_property(g, Property::jacobi))
            courant_law_checks(f.lie(), r, pre + "courant ");
    }
    for (const auto& t : f.tables) verify_table(f, t, r, pre);
}

void verify_pfaff(const std::string& file, const std::string& text, Report& r) {
    const std::string pre = file + ": ";
    PfaffFile f;
    try {
        f = parse_pfaff(text);
    } catch (const ParseError& e) {
        r.result(pre + "parse", e.what(), false);
        return;
    }
    bool same = false;
    try {
        same = parse_pfaff(render(f)) == f;
    } catch (const ParseError&) {
    }
    r.result(pre + "round-trip", same, same);
    const auto system = f.system();
    const auto points = default_sample_points(system.dim());
    for (const auto& [key, value] : f.expectations) {
        const std::string name = pre + key + " " + value;
        try {
            bool ok = true;
            std::string detail;
            if (key == "integrable") {
                const auto rep = integrability_check(system);
                ok = (rep.holds ? "true" : "false") == value;
                if (!rep.holds) detail = "witness " + witness_string(rep);
            } else {
                for (const auto& pt : points) {
                    std::string got;
                    if (key == "class") {
                        const auto cls = cartan_class_at(system, pt).cls;
                        const auto chars = characteristic_generators_at(system, pt).dim;
                        got = std::to_string(cls);
                        if (chars != cls) got += " (characteristic dim " + std::to_string(chars) + ")";
                    } else if (key == "contact") {
                        got = is_contact_form(system.forms.at(0), pt) ? "true" : "false";
                    } else {
                        const auto reeb = reeb_at(system.forms.at(0), pt);
                        got = reeb == parse_point(value) ? value : format_point(reeb);
                    }
                    if (got != value) {
                        ok = false;
                        detail = "at " + format_point(pt) + " got " + got;
                        break;
                    }
                }
            }
            if (ok) r.result(name, detail.empty() ? Json(true) : Json(detail), true);
            else r.result(name, detail.empty() ? Json(false) : Json(detail), false);
        } catch (const std::exception& e) {
            r.result(name, e.what(), false);
        }
    }
}

}  // namespace

Report cmd_corpus(const std::filesystem::path& dir) {
    Report r("corpus run");
    r.input("dir", dir.generic_string());
    if (!std::filesystem::is_directory(dir)) {
        r.input_error("not a directory: " + dir.generic_string());
        return r;
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::size_t fixtures = 0;
    for (const auto& path : files) {
        const auto ext = path.extension().string();
        if (ext != ".alg" && ext != ".lie" && ext != ".pfaff") continue;
        ++fixtures;
        const std::string name = path.filename().generic_string();
        const std::string text = read_file(path);
        if (ext == ".pfaff") verify_pfaff(name, text, r);
        else verify_algebra(name, text, r);
    }
    r.result("fixtures", fixtures);
    const auto [checks, failed] = r.counts();
    r.result("checks", checks);
    r.result("failed", failed);
    return r;
}

}  // namespace lrw::cli
