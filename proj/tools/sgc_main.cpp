// sgc - command line front end: susceptibility sweeps over (delta_p, p)
// grids, single-point steady states and response coefficients, and the
// end-to-end verification suite.
//
// Exit codes: 0 success, 1 validation error, 2 computation error
// (singularity, non-unique steady state, failed verification), 3 I/O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgc/errors.hpp"
#include "sgc/evolve.hpp"
#include "sgc/liouvillian.hpp"
#include "sgc/perturbation.hpp"
#include "sgc/susceptibility.hpp"
#include "sgc/sweep.hpp"
#include "sgc/verify.hpp"

namespace {

struct PointArgs {
    double gamma2 = 1.0;
    double gamma3 = 1.0;
    double p = 0.0;
    double omega_c0 = 4.0;
    double omega_p0 = 0.1;
    double delta = 0.0;
};

void add_point_options(CLI::App* cmd, PointArgs& args) {
    cmd->add_option("--gamma2", args.gamma2, "decay half-rate |1>->|2> (frequency unit)");
    cmd->add_option("--gamma3", args.gamma3, "decay half-rate |1>->|3>, gamma2 units");
    cmd->add_option("--p", args.p, "dipole alignment cos(theta) in [-1,1]");
    cmd->add_option("--omega-c0", args.omega_c0, "bare coupling Rabi frequency");
    cmd->add_option("--omega-p0", args.omega_p0, "bare probe Rabi frequency");
    cmd->add_option("--delta", args.delta, "probe detuning, gamma2 units");
}

sgc::SystemParams to_params(const PointArgs& args) {
    sgc::SystemParams params;
    params.gamma2 = args.gamma2;
    params.gamma3 = args.gamma3;
    params.p = args.p;
    params.omega_c0 = args.omega_c0;
    params.omega_p0 = args.omega_p0;
    params.delta_p = args.delta;
    sgc::require_valid(params);
    return params;
}

std::string num(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

int run_sweep_command(const sgc::SweepConfig& config) {
    const sgc::ValidationResult check = sgc::validate_config(config);
    if (!check.ok()) {
        for (const auto& violation : check.violations) {
            std::cerr << "error: " << violation << "\n";
        }
        return 1;
    }
    const sgc::SweepTable table = sgc::run_sweep(config);
    sgc::write_output(table, config);
    std::cout << table.size() << " rows -> " << config.output_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-system simulator with spontaneous-emission interference"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate chi1/chi2 over a (delta_p, p) grid");
    std::string config_path;
    sgc::SweepConfig config;
    std::vector<double> p_values;
    std::string mode_name, format_name, out_path;
    auto* config_opt = sweep_cmd->add_option("--config", config_path, "JSON config file");
    sweep_cmd->add_option("--omega-c0", config.base.omega_c0, "bare coupling Rabi frequency");
    sweep_cmd->add_option("--omega-p0", config.base.omega_p0, "bare probe Rabi frequency");
    sweep_cmd->add_option("--gamma2", config.base.gamma2, "decay half-rate |1>->|2>");
    sweep_cmd->add_option("--gamma3", config.base.gamma3, "decay half-rate |1>->|3>");
    sweep_cmd->add_option("--p", p_values, "alignment value(s), repeatable");
    sweep_cmd->add_option("--delta-min", config.delta_min, "grid start, gamma2 units");
    sweep_cmd->add_option("--delta-max", config.delta_max, "grid end, gamma2 units");
    sweep_cmd->add_option("--points", config.delta_count, "grid point count (>= 2)");
    sweep_cmd->add_option("--mode", mode_name, "analytic | full");
    sweep_cmd->add_option("--out", out_path, "output file path");
    sweep_cmd->add_option("--format", format_name, "csv | json");
    sweep_cmd->add_option("--epsilon", config.extract.epsilon,
                          "probe amplitude step for the full-mode oracle");
    sweep_cmd->add_option("--chi1-scale", config.scales.chi1_scale,
                          "dimensional prefactor applied to chi1");
    sweep_cmd->add_option("--chi2-scale", config.scales.chi2_scale,
                          "dimensional prefactor applied to chi2");

    // steady
    auto* steady_cmd = app.add_subcommand("steady", "print the steady-state density matrix");
    PointArgs steady_args;
    add_point_options(steady_cmd, steady_args);

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "print chi1 and chi2 at a single point");
    PointArgs chi_args;
    add_point_options(chi_cmd, chi_args);
    sgc::ChiScales chi_scales;
    chi_cmd->add_option("--chi1-scale", chi_scales.chi1_scale, "dimensional prefactor for chi1");
    chi_cmd->add_option("--chi2-scale", chi_scales.chi2_scale, "dimensional prefactor for chi2");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run the full invariant/oracle suite and report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 1;
    }

    try {
        if (sweep_cmd->parsed()) {
            if (*config_opt) {
                // file first, explicitly given inline flags override it
                sgc::SweepConfig merged = sgc::load_config(config_path);
                if (sweep_cmd->count("--omega-c0")) merged.base.omega_c0 = config.base.omega_c0;
                if (sweep_cmd->count("--omega-p0")) merged.base.omega_p0 = config.base.omega_p0;
                if (sweep_cmd->count("--gamma2")) merged.base.gamma2 = config.base.gamma2;
                if (sweep_cmd->count("--gamma3")) merged.base.gamma3 = config.base.gamma3;
                if (sweep_cmd->count("--delta-min")) merged.delta_min = config.delta_min;
                if (sweep_cmd->count("--delta-max")) merged.delta_max = config.delta_max;
                if (sweep_cmd->count("--points")) merged.delta_count = config.delta_count;
                if (sweep_cmd->count("--epsilon")) merged.extract.epsilon = config.extract.epsilon;
                if (sweep_cmd->count("--chi1-scale")) {
                    merged.scales.chi1_scale = config.scales.chi1_scale;
                }
                if (sweep_cmd->count("--chi2-scale")) {
                    merged.scales.chi2_scale = config.scales.chi2_scale;
                }
                config = merged;
            }
            if (!p_values.empty()) config.p_values = p_values;
            if (!mode_name.empty()) {
                if (mode_name == "analytic") {
                    config.mode = sgc::SweepMode::kAnalytic;
                } else if (mode_name == "full") {
                    config.mode = sgc::SweepMode::kFull;
                } else {
                    throw sgc::ConfigError("mode must be \"analytic\" or \"full\"");
                }
            }
            if (!format_name.empty()) {
                if (format_name == "csv") {
                    config.format = sgc::OutputFormat::kCsv;
                } else if (format_name == "json") {
                    config.format = sgc::OutputFormat::kJson;
                } else {
                    throw sgc::ConfigError("format must be \"csv\" or \"json\"");
                }
            }
            if (!out_path.empty()) config.output_path = out_path;
            return run_sweep_command(config);
        }

        if (steady_cmd->parsed()) {
            const sgc::SystemParams params = to_params(steady_args);
            const sgc::DensityMatrix rho = sgc::steady_state(params);
            const double residual = (sgc::build_liouvillian(params) * sgc::vectorize(rho))
                                        .cwiseAbs()
                                        .maxCoeff();
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    std::cout << "rho" << (i + 1) << (j + 1) << " = (" << num(rho(i, j).real())
                              << ", " << num(rho(i, j).imag()) << ")\n";
                }
            }
            std::cout << "trace = " << num(rho.trace().real()) << "\n";
            std::cout << "residual = " << num(residual) << "\n";
            return 0;
        }

        if (chi_cmd->parsed()) {
            const sgc::SystemParams params = to_params(chi_args);
            const sgc::Complex x1 = sgc::chi1(params) * chi_scales.chi1_scale;
            const sgc::Complex x2 = sgc::chi2(params) * chi_scales.chi2_scale;
            std::cout << "delta_p = " << num(params.delta_p) << "\n";
            std::cout << "p = " << num(params.p) << "\n";
            std::cout << "omega_c_eff = " << num(sgc::omega_c_eff(params)) << "\n";
            std::cout << "chi1 = (" << num(x1.real()) << ", " << num(x1.imag()) << ")\n";
            std::cout << "chi2 = (" << num(x2.real()) << ", " << num(x2.imag()) << ")\n";
            std::cout << "abs_chi2 = " << num(std::abs(x2)) << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto results = sgc::run_verification_suite();
            const int failures = sgc::print_report(results, std::cout);
            return failures == 0 ? 0 : 2;
        }
    } catch (const sgc::ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const std::domain_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const sgc::IoError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
