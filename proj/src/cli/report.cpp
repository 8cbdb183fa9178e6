#include "lrw/cli/report.hpp"

#include <algorithm>

#include "lrw/cli/formats.hpp"

namespace lrw::cli {

namespace {

std::string text_of(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + text_of(x);
        return s;
    }
    return v.dump();
}

Json table_json(const StructureAlgebra& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(format_lincomb(from_vector(a.product(i, j), a.labels())));
        rows.push_back(std::move(row));
    }
    return Json{{"columns", a.labels()}, {"rows", std::move(rows)}};
}

std::vector<std::string> grid(const std::vector<std::vector<std::string>>& cells) {
    const std::size_t cols = cells.empty() ? 0 : cells[0].size();
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j < cols; ++j) width[j] = std::max(width[j], row[j].size());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string s;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) s += " | ";
            s += std::string(width[j] - cells[i][j].size(), ' ') + cells[i][j];
        }
        out.push_back(s);
        if (i == 0) {
            std::string sep;
            for (std::size_t j = 0; j < cols; ++j) sep += (j ? "-+-" : "") + std::string(width[j], '-');
            out.push_back(sep);
        }
    }
    return out;
}

}  // namespace

void Report::result(const std::string& name, Json value, std::optional<bool> ok) {
    if (ok && !*ok) fail();
    items_.push_back({Item::named, name, std::move(value), ok});
}

void Report::witness(const std::string& name, const PropertyReport& r) {
    if (r.holds) return;
    Json w{{"check", name}, {"property", r.property}, {"tuple", r.witness_labels}};
    witnesses_.push_back(std::move(w));
}

void Report::check(const std::string& name, const PropertyReport& r) {
    result(name, r.holds, r.holds);
    witness(name, r);
    if (!r.holds) line("  witness " + witness_string(r));
}

void Report::note(const std::string& name, const PropertyReport& r) {
    result(name, r.holds);
    witness(name, r);
    if (!r.holds) line("  witness " + witness_string(r));
}

void Report::table(const std::string& name, const StructureAlgebra& a) {
    items_.push_back({Item::named, name, table_json(a), std::nullopt});
}

std::pair<std::size_t, std::size_t> Report::counts() const {
    std::size_t checks = 0, failed = 0;
    for (const auto& it : items_) {
        if (!it.ok) continue;
        ++checks;
        if (!*it.ok) ++failed;
    }
    return {checks, failed};
}

void Report::input_error(const std::string& message) {
    exit_ = exit_input;
    items_.push_back({Item::named, "error", message, std::nullopt});
}

std::vector<std::string> render_table(const StructureAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    for (std::size_t j = 0; j < n; ++j) cells[0][j + 1] = a.label(j);
    for (std::size_t i = 0; i < n; ++i) {
        cells[i + 1][0] = a.label(i);
        for (std::size_t j = 0; j < n; ++j) cells[i + 1][j + 1] = format_lincomb(from_vector(a.product(i, j), a.labels()));
    }
    return grid(cells);
}

std::string format_map(const LinearMap& m, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        const auto img = m.image(j);
        if (is_zero(img)) continue;
        s += (s.empty() ? "" : ", ") + labels[j] + " -> " + format_lincomb(from_vector(img, labels));
    }
    return s.empty() ? "0" : s;
}

void Report::write_text(std::ostream& os) const {
    for (const auto& it : items_) {
        if (it.kind == Item::plain) {
            os << it.name << "\n";
        } else if (it.value.is_object() && it.value.contains("rows")) {
            os << it.name << ":\n";
            const auto& cols = it.value["columns"];
            const std::size_t n = cols.size();
            std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
            for (std::size_t j = 0; j < n; ++j) cells[0][j + 1] = cols[j].get<std::string>();
            for (std::size_t i = 0; i < n; ++i) {
                cells[i + 1][0] = cols[i].get<std::string>();
                for (std::size_t j = 0; j < n; ++j) cells[i + 1][j + 1] = it.value["rows"][i][j].get<std::string>();
            }
            for (const auto& l : grid(cells)) os << "  " << l << "\n";
        } else {
            os << it.name << ": " << text_of(it.value) << "\n";
        }
    }
}

void Report::write_json(std::ostream& os) const {
    Json results = Json::array();
    for (const auto& it : items_) {
        if (it.kind == Item::plain) continue;
        Json r{{"name", it.name}, {"value", it.value}};
        if (it.ok) r["ok"] = *it.ok;
        results.push_back(std::move(r));
    }
    Json doc{{"command", command_}, {"inputs", inputs_}, {"results", std::move(results)},
             {"witnesses", witnesses_}, {"exit", exit_}};
    os << doc.dump(2) << "\n";
}

}  // namespace lrw::cli
