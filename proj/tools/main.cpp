#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zitterlab/scenario.hpp"

namespace {

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw zitterlab::ConfigParseError("--values entry '" + item + "' is not a number");
        }
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zitterlab - spinning-particle kinematics and simulation toolkit"};
    app.require_subcommand(0, 1);

    double tolerance = -1.0;
    bool seed_format = false;
    app.add_option("--tolerance", tolerance, "override the validation tolerances");
    app.add_flag("--seed-format", seed_format, "print template configs (one per scenario kind)");

    std::string run_config, run_out;
    CLI::App* run = app.add_subcommand("run", "execute one scenario config");
    run->add_option("config", run_config, "scenario JSON file")->required();
    run->add_option("--out", run_out, "output directory")->required();

    std::string sweep_config, sweep_out, sweep_param, sweep_values;
    CLI::App* sweep = app.add_subcommand("sweep", "run a scenario once per parameter value");
    sweep->add_option("config", sweep_config, "scenario JSON file")->required();
    sweep->add_option("--param", sweep_param, "dotted config path to override")->required();
    sweep->add_option("--values", sweep_values, "comma-separated numeric values")->required();
    sweep->add_option("--out", sweep_out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (seed_format) {
        std::cout << zitterlab::seed_configs().dump(2) << '\n';
        return 0;
    }
    if (!run->parsed() && !sweep->parsed()) {
        std::cerr << app.help();
        return 2;
    }

    zitterlab::ScenarioOptions opts;
    opts.tolerance = tolerance;

    try {
        if (run->parsed()) {
            const auto result = zitterlab::run_scenario_file(run_config, run_out, opts);
            std::cout << "report: " << result.report_path.string() << '\n';
            if (!result.csv_path.empty())
                std::cout << "trajectory: " << result.csv_path.string() << '\n';
            return 0;
        }

        const auto values = parse_values(sweep_values);
        std::ifstream in(sweep_config);
        if (!in)
            throw zitterlab::ConfigParseError("cannot read config file " + sweep_config);
        nlohmann::ordered_json cfg;
        try {
            cfg = nlohmann::ordered_json::parse(in);
        } catch (const std::exception& e) {
            throw zitterlab::ConfigParseError(std::string("invalid JSON: ") + e.what());
        }
        const auto outcomes = zitterlab::run_sweep(cfg, sweep_param, values, sweep_out, opts);
        int exit_code = 0;
        for (const auto& oc : outcomes) {
            if (oc.ok) {
                std::cout << sweep_param << " = " << oc.value << " -> " << oc.out_dir.string()
                          << '\n';
            } else {
                std::cerr << sweep_param << " = " << oc.value << " failed: " << oc.error_message
                          << '\n';
                exit_code = std::max(exit_code, oc.exit_code);
            }
        }
        return exit_code;
    } catch (const zitterlab::Error& e) {
        std::cerr << "error (" << zitterlab::category_name(e.category()) << "): " << e.what()
                  << '\n';
        const std::string out_dir = run->parsed() ? run_out : sweep_out;
        if (!out_dir.empty()) zitterlab::write_error_record(out_dir, e);
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
