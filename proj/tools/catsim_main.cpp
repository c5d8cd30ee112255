// Command-line front end: parameter sweeps, figure-data reproduction as CSV,
// and a verification command running all oracle cross-checks.

#include "catsim/errors.hpp"
#include "catsim/sweep.hpp"
#include "catsim/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return 1;
    }
    os << content;
    if (!os) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"catsim: entangled coherent-state qubits under amplitude damping\n"
                 "(repetition-code distillation and three-route concurrence)"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid and write CSV");
    catsim::sweep_config cfg;
    std::vector<std::string> route_names{"general", "xmatrix", "evolution"};
    std::string out_path = "sweep.csv";
    std::string config_path;
    sweep_cmd->add_option("--alpha-min", cfg.alpha_min, "smallest coherent amplitude");
    sweep_cmd->add_option("--alpha-max", cfg.alpha_max, "largest coherent amplitude");
    sweep_cmd->add_option("--alpha-steps", cfg.alpha_steps, "number of amplitude grid points");
    sweep_cmd->add_option("--eta", cfg.etas, "channel transmissivities")->delimiter(',');
    sweep_cmd->add_option("--theta", cfg.thetas, "phase parameters")->delimiter(',');
    sweep_cmd->add_option("--w", cfg.ws, "branch weights")->delimiter(',');
    sweep_cmd->add_option("--code", cfg.codes, "odd repetition counts (1 = direct)")
        ->delimiter(',');
    sweep_cmd->add_option("--route", route_names,
                          "concurrence routes: general, xmatrix, evolution, oracle")
        ->delimiter(',');
    sweep_cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--out", out_path, "output CSV path");
    sweep_cmd->add_option("--config", config_path,
                          "plain 'key = value' config file; flags override its values");

    // ---- figure ----
    auto* fig_cmd = app.add_subcommand("figure", "reproduce figure data (1..5) as CSV");
    int fig_id = 1;
    int resolution = 121;
    std::string fig_out;
    fig_cmd->add_option("id", fig_id, "figure number")->required()->check(CLI::Range(1, 5));
    fig_cmd->add_option("--resolution", resolution, "grid points per axis");
    fig_cmd->add_option("--out", fig_out, "output CSV path (default figN.csv)");

    // ---- verify ----
    auto* verify_cmd =
        app.add_subcommand("verify", "run every cross-check and print a pass/fail report");
    catsim::verify_options vopt;
    verify_cmd->add_option("--tol-scale", vopt.tol_scale, "scale all check tolerances");
    verify_cmd
        ->add_option("--inject-pe-error", vopt.inject_pe_error,
                     "test hook: perturb the flip probability feeding the evolution route")
        ->group(""); // hidden from --help

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // validation errors exit 1; --help exits 0
    }

    try {
        if (sweep_cmd->parsed()) {
            if (!config_path.empty()) {
                const auto file = catsim::load_sweep_config(config_path);
                // command-line flags take precedence over file values
                auto absent = [&](const char* flag) { return sweep_cmd->count(flag) == 0; };
                if (file.keys.count("alpha-min") && absent("--alpha-min"))
                    cfg.alpha_min = file.values.alpha_min;
                if (file.keys.count("alpha-max") && absent("--alpha-max"))
                    cfg.alpha_max = file.values.alpha_max;
                if (file.keys.count("alpha-steps") && absent("--alpha-steps"))
                    cfg.alpha_steps = file.values.alpha_steps;
                if (file.keys.count("eta") && absent("--eta")) cfg.etas = file.values.etas;
                if (file.keys.count("theta") && absent("--theta"))
                    cfg.thetas = file.values.thetas;
                if (file.keys.count("w") && absent("--w")) cfg.ws = file.values.ws;
                if (file.keys.count("code") && absent("--code")) cfg.codes = file.values.codes;
                if (file.keys.count("threads") && absent("--threads"))
                    cfg.threads = file.values.threads;
                if (file.keys.count("route") && absent("--route")) route_names = file.routes;
                if (file.keys.count("out") && absent("--out")) out_path = file.out;
            }
            cfg.routes.clear();
            for (const auto& name : route_names) cfg.routes.insert(catsim::parse_route(name));
            cfg.validate();
            std::ostringstream buf;
            catsim::write_sweep_csv(buf, catsim::run_sweep(cfg));
            return write_file(out_path, buf.str());
        }
        if (fig_cmd->parsed()) {
            const std::string path =
                fig_out.empty() ? "fig" + std::to_string(fig_id) + ".csv" : fig_out;
            return write_file(path, catsim::figure_csv(fig_id, resolution));
        }
        if (verify_cmd->parsed()) {
            const auto results = catsim::run_all_checks(vopt);
            const bool ok = catsim::print_report(std::cout, results);
            return ok ? 0 : 2;
        }
    } catch (const catsim::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
