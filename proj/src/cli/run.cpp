#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "lrw/cli/commands.hpp"

namespace lrw::cli {

namespace {

// Thrown for unreadable or malformed input; maps to exit 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraFile load_algebra(const std::string& path) {
    try {
        return parse_algebra(read_input(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

PfaffFile load_pfaff(const std::string& path) {
    try {
        return parse_pfaff(read_input(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::filesystem::path default_corpus() {
    if (std::filesystem::is_directory("corpus")) return "corpus";
#ifdef LRW_CORPUS_DIR
    return LRW_CORPUS_DIR;
#else
    return "corpus";
#endif
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic workbench for Lie-Rinehart algebras and Pfaff systems", "lrw"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file;
    std::string property;
    bool table = false;
    std::string at;
    std::size_t p = 0, m = 0, n = 0;
    std::string dir;

    auto* check = app.add_subcommand("check", "Check the invariants of an algebra file");
    check->add_option("file", file)->required();
    check->add_option("--property", property,
                      "associative, commutative, anticommutative, jacobi or left_leibniz");
    auto* der = app.add_subcommand("der", "Derivation algebra");
    der->add_option("file", file)->required();
    der->add_flag("--table", table, "Print the bracket table of Der(A)");
    auto* full = app.add_subcommand("full-lr", "Full Lie-Rinehart algebra (A, Der(A))");
    full->add_option("file", file)->required();
    auto* pois = app.add_subcommand("poisson-lr", "Lie-Rinehart algebra of a Poisson algebra");
    pois->add_option("file", file)->required();
    auto* cour = app.add_subcommand("courant", "Courant bracket on g + g*");
    cour->add_option("file", file)->required();

    auto* pfaff = app.add_subcommand("pfaff", "Pfaff systems");
    pfaff->require_subcommand(1);
    std::vector<CLI::App*> pointwise;
    for (const char* name : {"class", "reeb", "contact", "integrable"}) {
        auto* sub = pfaff->add_subcommand(name);
        sub->add_option("file", file)->required();
        if (std::string(name) != "integrable") sub->add_option("--at", at, "Point, e.g. 0,1/2,3");
        pointwise.push_back(sub);
    }
    auto* darboux = pfaff->add_subcommand("darboux", "Darboux model system");
    darboux->add_option("--p", p)->required();
    darboux->add_option("--m", m)->required();

    auto* bound = app.add_subcommand("bound", "Dimension bound for integral manifolds");
    auto* bound_p = bound->add_option("--p", p);
    bound->add_option("--n", n)->required();

    auto* corpus = app.add_subcommand("corpus", "Bundled fixtures");
    corpus->require_subcommand(1);
    auto* corpus_run = corpus->add_subcommand("run", "Verify every fixture");
    corpus_run->add_option("--dir", dir, "Fixture directory");

    for (auto* sub : {check, der, full, pois, cour, pfaff, bound, corpus, corpus_run, darboux}) sub->fallthrough();
    for (auto* sub : pointwise) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    auto emit = [&](const Report& r) {
        if (format == "json") r.write_json(out);
        else r.write_text(out);
        return r.exit_code();
    };

    std::string command = "lrw";
    try {
        if (*check) {
            command = "check";
            std::optional<Property> prop;
            if (!property.empty()) {
                prop = property_from_string(property);
                if (!prop) throw InputError("unknown property '" + property + "'");
            }
            auto r = cmd_check(load_algebra(file), prop);
            r.input("file", file);
            return emit(r);
        }
        if (*der) {
            command = "der";
            auto r = cmd_der(load_algebra(file), table);
            r.input("file", file);
            return emit(r);
        }
        if (*full || *pois || *cour) {
            command = *full ? "full-lr" : *pois ? "poisson-lr" : "courant";
            const auto f = load_algebra(file);
            auto r = *full ? cmd_full_lr(f) : *pois ? cmd_poisson_lr(f) : cmd_courant(f);
            r.input("file", file);
            return emit(r);
        }
        if (*pfaff) {
            if (*darboux) {
                command = "pfaff darboux";
                return emit(cmd_darboux(p, m));
            }
            for (auto* sub : pointwise) {
                if (!*sub) continue;
                command = "pfaff " + sub->get_name();
                std::optional<RatVector> point;
                if (!at.empty()) {
                    try {
                        point = parse_point(at);
                    } catch (const std::exception& e) {
                        throw InputError("bad point '" + at + "': " + e.what());
                    }
                }
                auto r = cmd_pfaff(sub->get_name(), load_pfaff(file), point);
                r.input("file", file);
                return emit(r);
            }
        }
        if (*bound) {
            command = "bound";
            return emit(cmd_bound(bound_p->count() ? std::optional<std::size_t>(p) : std::nullopt, n));
        }
        if (*corpus_run) {
            command = "corpus run";
            return emit(cmd_corpus(dir.empty() ? default_corpus() : std::filesystem::path(dir)));
        }
    } catch (const InputError& e) {
        Report r(command);
        r.input_error(e.what());
        if (format == "json") return emit(r);
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionError& e) {
        Report r(command);
        r.result("error", e.what(), false);
        if (format == "json") return emit(r);
        err << "error: " << e.what() << "\n";
        return exit_failed;
    } catch (const ConstructionError& e) {
        Report r(command);
        r.result("error", e.what(), false);
        if (format == "json") return emit(r);
        err << "error: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::exception& e) {
        Report r(command);
        r.input_error(e.what());
        if (format == "json") return emit(r);
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    err << app.help();
    return exit_input;
}

}  // namespace lrw::cli
