// Command-line driver: produces the CSV datasets behind the OTOC growth,
// spectrum and CUE-baseline experiments, and runs the numerical
// verification suite.

#include "bakerotoc/bakerotoc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace bakerotoc;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_numerical = 2;
constexpr int exit_io = 3;

int write_dataset(const ExperimentConfig& cfg,
                  void (*runner)(const ExperimentConfig&, std::ostream&)) {
    if (cfg.output_path.empty()) {
        runner(cfg, std::cout);
        return exit_ok;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file: " << cfg.output_path << '\n';
        return exit_io;
    }
    runner(cfg, file);
    if (!file) {
        std::cerr << "error: write failed: " << cfg.output_path << '\n';
        return exit_io;
    }
    return exit_ok;
}

void attach_common_options(CLI::App* cmd, ExperimentConfig& cfg,
                           std::string& config_path) {
    cmd->add_option("--n", cfg.n, "Hilbert-space dimension (even, <= 4096)");
    cmd->add_option("--tmax", cfg.t_max, "largest time step");
    cmd->add_option("--jmin", cfg.j_min, "projector window lower index");
    cmd->add_option("--jmax", cfg.j_max, "projector window upper index (default N/2-1)");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--samples", cfg.n_samples, "CUE ensemble size");
    cmd->add_flag("--normalize", cfg.normalize, "divide f-columns by N");
    cmd->add_option("--out", cfg.output_path, "output CSV path (default stdout)");
    cmd->add_option("--config", config_path, "config file with key=value lines");
}

// Config values are applied before the flag parse, so flags override the file.
void apply_config_file(const std::string& path, ExperimentConfig& cfg,
                       std::string& mode_name) {
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return (a == std::string::npos) ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(file, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file line " + std::to_string(line_no) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "n") cfg.n = std::stoll(value);
        else if (key == "tmax") cfg.t_max = std::stol(value);
        else if (key == "jmin") cfg.j_min = std::stoll(value);
        else if (key == "jmax") cfg.j_max = std::stoll(value);
        else if (key == "mode") mode_name = value;
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "samples") cfg.n_samples = std::stoi(value);
        else if (key == "normalize") cfg.normalize = (value == "1" || value == "true");
        else if (key == "out") cfg.output_path = value;
        else
            throw std::invalid_argument("config file: unknown key '" + key + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"out-of-time-ordered correlators in the quantum baker map"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string mode_name = "quantum";
    std::string config_path;

    // apply the config file first so command-line flags override it
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (!config_path.empty()) {
        try {
            apply_config_file(config_path, cfg, mode_name);
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << '\n';
            return exit_validation;
        }
    }

    CLI::App* otoc_cmd = app.add_subcommand("otoc", "f2/f4/f growth series");
    attach_common_options(otoc_cmd, cfg, config_path);
    otoc_cmd->add_option("--mode", mode_name, "quantum | semiquantum")
        ->check(CLI::IsMember({"quantum", "semiquantum"}));

    CLI::App* sq_cmd =
        app.add_subcommand("semiquantum", "semiquantum series with closed forms");
    attach_common_options(sq_cmd, cfg, config_path);

    CLI::App* spec_cmd =
        app.add_subcommand("spectrum", "singular values and eigenvalues of truncations");
    attach_common_options(spec_cmd, cfg, config_path);

    CLI::App* cue_cmd =
        app.add_subcommand("cue-baseline", "CUE saturation baseline ensemble");
    attach_common_options(cue_cmd, cfg, config_path);

    CLI::App* verify_cmd = app.add_subcommand("verify", "numerical check suite");
    attach_common_options(verify_cmd, cfg, config_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (otoc_cmd->parsed()) {
            cfg.command = "otoc";
            if (mode_name != "quantum" && mode_name != "semiquantum")
                throw std::invalid_argument("config: mode must be quantum or semiquantum");
            cfg.mode = (mode_name == "semiquantum") ? EvolutionMode::semiquantum
                                                    : EvolutionMode::quantum;
            cfg.validate();
            return write_dataset(cfg, &run_otoc);
        }
        if (sq_cmd->parsed()) {
            cfg.command = "otoc";
            cfg.mode = EvolutionMode::semiquantum;
            if (cfg.t_max > BakerConfig::from_dimension(cfg.n).max_time)
                cfg.t_max = BakerConfig::from_dimension(cfg.n).max_time;
            cfg.validate();
            return write_dataset(cfg, &run_otoc);
        }
        if (spec_cmd->parsed()) {
            cfg.command = "spectrum";
            cfg.validate();
            return write_dataset(cfg, &run_spectrum);
        }
        if (cue_cmd->parsed()) {
            cfg.command = "cue-baseline";
            cfg.validate();
            return write_dataset(cfg, &run_cue_baseline);
        }
        // verify
        cfg.command = "verify";
        cfg.validate();
        const VerifyReport report = run_verify(cfg);
        report.print(std::cout);
        return report.all_passed() ? exit_ok : exit_numerical;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_validation;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_numerical;
    }
}
