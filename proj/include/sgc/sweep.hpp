// sweep.hpp - batch evaluation of the susceptibilities over (delta_p, p)
// grids with CSV/JSON emission.
//
// Rows are computed independently (OpenMP across grid points, one writer
// slot per row) in a fixed order: p outer, delta_p inner ascending. Output
// is byte-identical across runs and thread counts.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgc/params.hpp"
#include "sgc/perturbation.hpp"
#include "sgc/susceptibility.hpp"

namespace sgc {

enum class SweepMode { kAnalytic, kFull };
enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
    SystemParams base;  // base.p and base.delta_p are overridden per row
    double delta_min = -10.0;
    double delta_max = 10.0;
    int delta_count = 1001;
    std::vector<double> p_values = {0.0, 0.99};
    SweepMode mode = SweepMode::kAnalytic;
    std::string output_path = "sweep.csv";
    OutputFormat format = OutputFormat::kCsv;
    ChiScales scales;
    ExtractOptions extract;  // used in full mode only
};

// Parses a JSON config file. Unknown keys are rejected. Throws ConfigError.
SweepConfig load_config(const std::string& path);

ValidationResult validate_config(const SweepConfig& config);

struct SweepRow {
    double delta_p = 0.0;
    double p = 0.0;
    double omega_c_eff = 0.0;
    double re_chi1 = 0.0;
    double im_chi1 = 0.0;
    double re_chi2 = 0.0;
    double im_chi2 = 0.0;
    double abs_chi2 = 0.0;
    double oracle_residual_c1 = 0.0;  // full mode: extracted vs closed form
    double oracle_residual_c2 = 0.0;
    bool singular = false;  // response formulas undefined at this point
};

using SweepTable = std::vector<SweepRow>;

// Evaluates every (p, delta_p) pair; parallel across rows when OpenMP is
// enabled. Throws ConfigError on an invalid config before any computation.
SweepTable run_sweep(const SweepConfig& config);

// Single-threaded reference path; bit-identical to run_sweep.
SweepTable run_sweep_serial(const SweepConfig& config);

// Writes the table to config.output_path in config.format. CSV columns:
//   delta_p,p,omega_c_eff,re_chi1,im_chi1,re_chi2,im_chi2,abs_chi2
//   [,oracle_residual_c1,oracle_residual_c2 in full mode] ,singular
// with 17-significant-digit doubles and LF line endings; JSON is an array
// of objects with the same field names. Throws IoError with path context.
void write_output(const SweepTable& table, const SweepConfig& config);

void write_csv(const SweepTable& table, const SweepConfig& config, std::ostream& out);
void write_json(const SweepTable& table, const SweepConfig& config, std::ostream& out);

// Worker count for parallel sections: OpenMP's default, optionally capped
// by the SGC_THREADS environment variable.
int sweep_thread_count();

}  // namespace sgc
