#pragma once
// Collected output of one command, rendered as text or JSON.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrw/algebra.hpp"

namespace lrw::cli {

using Json = nlohmann::ordered_json;

/// Exit codes: all checks passed, a mathematical check failed, bad input.
enum Exit : int { exit_ok = 0, exit_failed = 1, exit_input = 2 };

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void input(const std::string& key, Json value) { inputs_[key] = std::move(value); }

    /// Text-only line (headings, blank separators).
    void line(std::string text) { items_.push_back({Item::plain, std::move(text), {}, std::nullopt}); }

    /// Named value; `ok` marks it as a check that can fail the command.
    void result(const std::string& name, Json value, std::optional<bool> ok = std::nullopt);

    /// A check whose failure sets exit 1 and records the witness.
    void check(const std::string& name, const PropertyReport& r);
    /// Informational property: reported with its witness but never fails the command.
    void note(const std::string& name, const PropertyReport& r);

    /// Multiplication table in row-times-column form.
    void table(const std::string& name, const StructureAlgebra& a);

    void fail() { exit_ = std::max<int>(exit_, exit_failed); }
    void input_error(const std::string& message);

    [[nodiscard]] int exit_code() const { return exit_; }
    /// Number of pass/fail results and how many failed.
    [[nodiscard]] std::pair<std::size_t, std::size_t> counts() const;
    void write_text(std::ostream& os) const;
    void write_json(std::ostream& os) const;

private:
    struct Item {
        enum Kind { plain, named } kind;
        std::string name;
        Json value;
        std::optional<bool> ok;
    };
    void witness(const std::string& name, const PropertyReport& r);

    std::string command_;
    Json inputs_ = Json::object();
    std::vector<Item> items_;
    Json witnesses_ = Json::array();
    int exit_ = exit_ok;
};

/// Right-aligned grid with a label column.
[[nodiscard]] std::vector<std::string> render_table(const StructureAlgebra& a);

/// "e2 -> 2 e2, e3 -> e3"; "0" for the zero map.
[[nodiscard]] std::string format_map(const LinearMap& m, const std::vector<std::string>& labels);

}  // namespace lrw::cli
