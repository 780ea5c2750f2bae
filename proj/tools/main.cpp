#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "becmirror/commands.hpp"
#include "becmirror/errors.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_threads) {
    cmd->add_option("--config", opts.config_path, "scenario file (defaults apply when omitted)");
    cmd->add_option("--out", opts.out_path, "output file (stdout when omitted)");
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_threads) {
        cmd->add_option("--threads", opts.threads, "worker threads for the scan")
            ->check(CLI::PositiveNumber);
    }
}

int run_with_output(const CommonOptions& opts,
                    int (*runner)(const becmirror::ScenarioConfig&, std::ostream&,
                                  becmirror::OutputFormat, int)) {
    const becmirror::ScenarioConfig cfg = opts.config_path.empty()
                                              ? becmirror::ScenarioConfig{}
                                              : becmirror::parse_scenario_file(opts.config_path);
    const becmirror::OutputFormat format = opts.format == "json"
                                               ? becmirror::OutputFormat::json
                                               : becmirror::OutputFormat::csv;
    if (opts.out_path.empty()) {
        return runner(cfg, std::cout, format, opts.threads);
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
        throw becmirror::ConfigError("cannot open output file '" + opts.out_path + "'");
    }
    return runner(cfg, out, format, opts.threads);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic simulator of amplified-light kicks on a lattice condensate"};
    app.require_subcommand(1);

    CommonOptions fringes_opts, spectrum_opts, displacement_opts, validate_opts;
    CLI::App* fringes = app.add_subcommand("fringes", "photon-number fringe vs trigger phase");
    add_common(fringes, fringes_opts, false);
    CLI::App* spectrum = app.add_subcommand("spectrum", "Bragg reflectivity vs detuning");
    add_common(spectrum, spectrum_opts, true);
    CLI::App* displacement =
        app.add_subcommand("displacement", "condensate displacement fringe vs trigger phase");
    add_common(displacement, displacement_opts, false);
    CLI::App* validate = app.add_subcommand("validate", "run the built-in consistency checks");
    validate->add_option("--config", validate_opts.config_path, "scenario file");
    validate->add_option("--out", validate_opts.out_path, "report file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; genuine usage errors land on the
        // configuration-error code
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fringes->parsed()) {
            return run_with_output(fringes_opts,
                                   [](const becmirror::ScenarioConfig& cfg, std::ostream& out,
                                      becmirror::OutputFormat format, int) {
                                       return becmirror::run_fringes(cfg, out, format);
                                   });
        }
        if (spectrum->parsed()) {
            return run_with_output(spectrum_opts,
                                   [](const becmirror::ScenarioConfig& cfg, std::ostream& out,
                                      becmirror::OutputFormat format, int threads) {
                                       return becmirror::run_spectrum(cfg, out, format, threads);
                                   });
        }
        if (displacement->parsed()) {
            return run_with_output(displacement_opts,
                                   [](const becmirror::ScenarioConfig& cfg, std::ostream& out,
                                      becmirror::OutputFormat format, int) {
                                       return becmirror::run_displacement(cfg, out, format);
                                   });
        }
        return run_with_output(validate_opts,
                               [](const becmirror::ScenarioConfig& cfg, std::ostream& out,
                                  becmirror::OutputFormat, int) {
                                   return becmirror::run_validate(cfg, out);
                               });
    } catch (const becmirror::ConfigError& err) {
        std::cerr << "config error";
        if (err.line > 0) std::cerr << " (line " << err.line << ")";
        std::cerr << ": " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
