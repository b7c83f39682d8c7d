// affine-orth: command-line front end for the verification scenarios.
//
//   affine-orth verify <scenario> [--k v[,v...]] [--t v[,v...]] [--dim n]
//                [--grid N] [--seed s] [--tol-scale x] [--format text|json]
//                [--output PATH]
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "affineorth/report_json.hpp"
#include "affineorth/scenarios.hpp"

namespace {

const std::vector<std::string> kScenarios{"hopf",     "torus-flat",   "local-frame",
                                          "theorem1", "quasi-metric", "gauss-bonnet",
                                          "all"};

int emit(const std::vector<affineorth::VerificationReport>& reports, bool single,
         const std::string& format, const std::string& output_path) {
    std::string body;
    if (format == "json") {
        if (single) {
            body = affineorth::to_json(reports.front()).dump(2) + "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports)
                arr.push_back(affineorth::to_json(r));
            body = arr.dump(2) + "\n";
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i)
            body += (i ? "\n" : "") + affineorth::render_text(reports[i]);
    }

    if (output_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "affine-orth: cannot open output file: " << output_path << "\n";
            return 2;
        }
        out << body;
    }
    for (const auto& r : reports)
        if (!r.overall)
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of diagonal metrics, connection deformations "
                 "and Euler forms",
                 "affine-orth"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run one verification scenario, or all");
    std::string scenario;
    std::vector<double> k_values;
    std::vector<double> t_values;
    int dim = 2;
    int grid = 0;
    std::uint64_t seed = 0;
    double tol_scale = 1.0;
    std::string format = "text";
    std::string output_path;

    verify->add_option("scenario", scenario, "One of: hopf, torus-flat, local-frame, "
                                             "theorem1, quasi-metric, gauss-bonnet, all")
        ->required()
        ->check(CLI::IsMember(kScenarios));
    verify->add_option("--k", k_values, "Connection parameters (comma separated)")
        ->delimiter(',');
    verify->add_option("--t", t_values, "Deformation parameters in [0,1] (comma separated)")
        ->delimiter(',');
    verify->add_option("--dim", dim, "Chart dimension")->check(CLI::PositiveNumber);
    verify->add_option("--grid", grid, "Quadrature points per axis")
        ->check(CLI::Range(4, 1 << 14));
    verify->add_option("--seed", seed, "Seed for probe points and metric families");
    verify->add_option("--tol-scale", tol_scale, "Uniform multiplier on all tolerances")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", output_path, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (double t : t_values) {
        if (!(t >= 0.0 && t <= 1.0)) {
            std::cerr << "affine-orth: --t values must lie in [0, 1]\n";
            return 2;
        }
    }

    affineorth::ScenarioConfig cfg;
    cfg.dim = dim;
    cfg.grid = grid;
    cfg.seed = seed;
    cfg.k_values = k_values;
    cfg.t_values = t_values;
    cfg.tolerances.scale = tol_scale;

    try {
        std::vector<affineorth::VerificationReport> reports;
        if (scenario == "all")
            reports = affineorth::verify_all(cfg);
        else
            reports.push_back(affineorth::run_scenario(scenario, cfg));
        return emit(reports, scenario != "all", format, output_path);
    } catch (const std::exception& e) {
        std::cerr << "affine-orth: " << e.what() << "\n";
        return 2;
    }
}
