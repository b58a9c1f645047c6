// brcover: homological calculator for symplectic branched covers.
//
//   brcover example2 --g1 1 --g2 1 --m1 1 --m2 1 -d 2 [--kaehler]
//   brcover kodaira-thurston --m1 1 --m2 1 -d 2
//   brcover tower7 -d 3
//   brcover catalog [-d 2]
//   brcover kollar [--omega-pullback] [--target-pi2-trivial]
//   brcover snf matrix.json
//   brcover --batch runs.json
//
// Exit codes: 0 all verdicts pass, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "brcover/commands.hpp"
#include "brcover/report_io.hpp"

namespace {

using namespace brcover;

std::vector<std::vector<long>> parse_relators(const std::string& text)
{
    std::vector<std::vector<long>> out;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        if (row.empty()) continue;
        std::vector<long> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                r.push_back(std::stol(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw DomainError("bad relator entry '" + cell + "'");
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

int emit(const std::string& text, const std::optional<std::string>& path)
{
    if (!path) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << *path << "'\n";
        return kExitUsage;
    }
    out << text;
    return kExitPass;
}

std::string render_batch(const std::vector<RunConfig>& configs, const std::vector<RunResult>& results, OutputFormat fmt)
{
    if (fmt == OutputFormat::json) {
        Json all = Json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            all.push_back({{"index", i},
                           {"command", command_name(configs[i].command)},
                           {"exit_code", r.exit_code},
                           {"result", r.output.empty() ? Json(nullptr) : Json::parse(r.output)},
                           {"error", r.error.empty() ? Json(nullptr) : Json(r.error)}});
        }
        return all.dump(2) + "\n";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < results.size(); ++i) {
        os << "=== run " << i << " (" << command_name(configs[i].command) << ") exit " << results[i].exit_code
           << " ===\n";
        os << (results[i].error.empty() ? results[i].output : "error: " + results[i].error + "\n") << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact homological calculator for symplectic branched covers"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    std::string format = "table";
    std::string out_path;
    std::string batch_path;
    std::string area1 = "1", area2 = "1";
    std::string test_relators;

    app.add_option("--batch", batch_path, "JSON array of run configurations");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", out_path, "Write output to PATH instead of stdout");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--g1", cfg.g1, "Genus of F1");
        sub->add_option("--g2", cfg.g2, "Genus of F2");
        sub->add_option("--m1", cfg.m1, "Vertical multiplicity m1");
        sub->add_option("--m2", cfg.m2, "Horizontal multiplicity m2");
        sub->add_option("-d", cfg.d, "Cover degree");
        sub->add_option("--area1", area1, "<[omega], horizontal> as p/q");
        sub->add_option("--area2", area2, "<[omega], vertical> as p/q");
        add_common(sub);
    };

    auto* ex2 = app.add_subcommand("example2", "Cyclic cover of F1 x F2 branched along a smoothed grid");
    add_grid(ex2);
    ex2->add_flag("--kaehler", cfg.kaehler, "Holomorphic (Kaehler) variant of the construction");

    auto* kt = app.add_subcommand("kodaira-thurston", "Cyclic cover of the Kodaira-Thurston manifold");
    add_grid(kt);
    kt->add_option("--test-relators", test_relators, "Replace the cover's H1 relators (e.g. \"1,0,0,0;0,1,0,0\")")
        ->group("");

    auto* tower = app.add_subcommand("tower7", "Two-stage cover with [omega]|Pi = 0 and c1|Pi != 0");
    tower->add_option("-d", cfg.d, "Degree of the second stage");
    add_common(tower);

    auto* catalog = app.add_subcommand("catalog", "Independence catalog of the two vanishing conditions");
    catalog->add_option("-d", cfg.d, "Degree of the tower witness");
    add_common(catalog);

    auto* kollar = app.add_subcommand("kollar", "Vanishing criterion for [omega] pulled back from pi_2-trivial Y");
    kollar->add_flag("--omega-pullback", cfg.omega_pullback, "[omega] = f*Omega for some Omega");
    kollar->add_flag("--target-pi2-trivial", cfg.target_pi2_trivial, "pi_2(Y) = 0");
    add_common(kollar);

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a JSON matrix file");
    snf_cmd->add_option("matrix", cfg.matrix_path, "Matrix JSON {rows, cols, entries}")->required();
    add_common(snf_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const OutputFormat fmt = format == "json" ? OutputFormat::json : OutputFormat::table;
    const std::optional<std::string> out = out_path.empty() ? std::nullopt : std::optional(out_path);

    if (!batch_path.empty()) {
        if (!app.get_subcommands().empty()) {
            std::cerr << "error: --batch cannot be combined with a subcommand\n";
            return kExitUsage;
        }
        std::vector<RunConfig> configs;
        try {
            std::ifstream in(batch_path);
            if (!in) throw DomainError("cannot open '" + batch_path + "'");
            configs = batch_from_json(Json::parse(in));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        for (auto& c : configs) c.format = fmt;
        const auto results = run_batch(configs);
        const int written = emit(render_batch(configs, results, fmt), out);
        return written != kExitPass ? written : batch_exit_code(results);
    }

    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        cfg.command = parse_command(name);
        cfg.area1 = parse_rational(area1);
        cfg.area2 = parse_rational(area2);
        if (kt->parsed() && kt->count("--test-relators") > 0) cfg.test_relators = parse_relators(test_relators);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    cfg.format = fmt;

    const RunResult r = run(cfg);
    if (!r.error.empty()) {
        std::cerr << "error: " << r.error << "\n";
        return r.exit_code;
    }
    const int written = emit(r.output, out);
    return written != kExitPass ? written : r.exit_code;
}
