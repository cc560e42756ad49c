#include "sgc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgc/errors.hpp"
#include "sgc/numerics.hpp"

namespace sgc {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& item : object.items()) {
        bool found = false;
        for (const char* key : known) {
            if (item.key() == key) {
                found = true;
                break;
            }
        }
        if (!found) throw ConfigError("config: unknown key \"" + item.key() + "\" in " + where);
    }
}

double get_number(const json& object, const char* key, double fallback) {
    if (!object.contains(key)) return fallback;
    if (!object[key].is_number()) {
        throw ConfigError(std::string("config: \"") + key + "\" must be a number");
    }
    return object[key].get<double>();
}

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

SweepRow compute_row(const SweepConfig& config, double p, double delta) {
    SystemParams point = config.base;
    point.p = p;
    point.delta_p = delta;

    SweepRow row;
    row.delta_p = delta;
    row.p = p;
    row.omega_c_eff = omega_c_eff(point);
    try {
        const Complex x1 = chi1(point) * config.scales.chi1_scale;
        const Complex x2 = chi2(point) * config.scales.chi2_scale;
        row.re_chi1 = x1.real();
        row.im_chi1 = x1.imag();
        row.re_chi2 = x2.real();
        row.im_chi2 = x2.imag();
        row.abs_chi2 = std::abs(x2);
        if (config.mode == SweepMode::kFull) {
            if (std::abs(p) == 1.0) {
                row.singular = true;  // no effective probe to vary at |p| = 1
            } else {
                const PerturbativeCoefficients extracted = extract_orders(point, config.extract);
                row.oracle_residual_c1 = relative_residual(rho13_first(point), extracted.c13_1);
                row.oracle_residual_c2 = relative_residual(rho13_second(point), extracted.c13_2);
            }
        }
    } catch (const SingularityError&) {
        row.singular = true;
    } catch (const NonUniqueSteadyStateError&) {
        row.singular = true;
    } catch (const ExtractionError&) {
        row.singular = true;
    }
    return row;
}

SweepTable run_sweep_impl(const SweepConfig& config, bool parallel) {
    const ValidationResult check = validate_config(config);
    if (!check.ok()) {
        std::ostringstream msg;
        msg << "invalid sweep config:";
        for (const auto& violation : check.violations) msg << " " << violation << ";";
        throw ConfigError(msg.str());
    }

    const std::int64_t n_delta = config.delta_count;
    const std::int64_t total = static_cast<std::int64_t>(config.p_values.size()) * n_delta;
    SweepTable rows(static_cast<std::size_t>(total));

    std::exception_ptr first_error;
    const int threads = parallel ? sweep_thread_count() : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (parallel)
#endif
    for (std::int64_t index = 0; index < total; ++index) {
        try {
            const double p = config.p_values[static_cast<std::size_t>(index / n_delta)];
            const double delta = grid_point(config.delta_min, config.delta_max,
                                            config.delta_count,
                                            static_cast<int>(index % n_delta));
            rows[static_cast<std::size_t>(index)] = compute_row(config, p, delta);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(sgc_sweep_error)
#endif
            {
                if (!first_error) first_error = std::current_exception();
            }
        }
    }
    (void)threads;
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

}  // namespace

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
    json root;
    try {
        in >> root;
    } catch (const json::parse_error& error) {
        throw ConfigError("config: parse failure in \"" + path + "\": " + error.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");

    reject_unknown_keys(root,
                        {"base", "delta_grid", "p_values", "mode", "output_path", "format",
                         "chi1_scale", "chi2_scale", "epsilon", "n_nodes"},
                        "top level");

    SweepConfig config;
    if (root.contains("base")) {
        const json& base = root["base"];
        if (!base.is_object()) throw ConfigError("config: \"base\" must be an object");
        reject_unknown_keys(
            base, {"gamma2", "gamma3", "p", "omega_c0", "omega_p0", "delta_p"}, "base");
        config.base.gamma2 = get_number(base, "gamma2", config.base.gamma2);
        config.base.gamma3 = get_number(base, "gamma3", config.base.gamma3);
        config.base.p = get_number(base, "p", config.base.p);
        config.base.omega_c0 = get_number(base, "omega_c0", config.base.omega_c0);
        config.base.omega_p0 = get_number(base, "omega_p0", config.base.omega_p0);
        config.base.delta_p = get_number(base, "delta_p", config.base.delta_p);
    }
    if (root.contains("delta_grid")) {
        const json& grid = root["delta_grid"];
        if (!grid.is_object()) throw ConfigError("config: \"delta_grid\" must be an object");
        reject_unknown_keys(grid, {"min", "max", "count"}, "delta_grid");
        config.delta_min = get_number(grid, "min", config.delta_min);
        config.delta_max = get_number(grid, "max", config.delta_max);
        if (grid.contains("count")) {
            if (!grid["count"].is_number_integer()) {
                throw ConfigError("config: \"delta_grid.count\" must be an integer");
            }
            config.delta_count = grid["count"].get<int>();
        }
    }
    if (root.contains("p_values")) {
        if (!root["p_values"].is_array()) {
            throw ConfigError("config: \"p_values\" must be an array");
        }
        config.p_values.clear();
        for (const auto& value : root["p_values"]) {
            if (!value.is_number()) throw ConfigError("config: p_values entries must be numbers");
            config.p_values.push_back(value.get<double>());
        }
    }
    if (root.contains("mode")) {
        const std::string mode = root["mode"].get<std::string>();
        if (mode == "analytic") {
            config.mode = SweepMode::kAnalytic;
        } else if (mode == "full") {
            config.mode = SweepMode::kFull;
        } else {
            throw ConfigError("config: mode must be \"analytic\" or \"full\"");
        }
    }
    if (root.contains("output_path")) config.output_path = root["output_path"].get<std::string>();
    if (root.contains("format")) {
        const std::string format = root["format"].get<std::string>();
        if (format == "csv") {
            config.format = OutputFormat::kCsv;
        } else if (format == "json") {
            config.format = OutputFormat::kJson;
        } else {
            throw ConfigError("config: format must be \"csv\" or \"json\"");
        }
    }
    config.scales.chi1_scale = get_number(root, "chi1_scale", config.scales.chi1_scale);
    config.scales.chi2_scale = get_number(root, "chi2_scale", config.scales.chi2_scale);
    config.extract.epsilon = get_number(root, "epsilon", config.extract.epsilon);
    if (root.contains("n_nodes")) {
        if (!root["n_nodes"].is_number_integer()) {
            throw ConfigError("config: \"n_nodes\" must be an integer");
        }
        config.extract.n_nodes = root["n_nodes"].get<int>();
    }
    return config;
}

ValidationResult validate_config(const SweepConfig& config) {
    ValidationResult result;

    SystemParams base = config.base;
    base.p = 0.0;       // per-row values are checked separately
    base.delta_p = 0.0;
    ValidationResult base_check = validate_params(base);
    result.violations = base_check.violations;

    if (config.delta_count < 2) result.violations.push_back("delta_grid.count must be >= 2");
    if (!(config.delta_min < config.delta_max)) {
        result.violations.push_back("delta_grid.min must be < delta_grid.max");
    }
    for (const double p : config.p_values) {
        if (!(std::abs(p) <= 1.0)) {
            result.violations.push_back("p_values entries must lie in [-1,1]");
            break;
        }
    }
    if (!(config.extract.epsilon > 0.0)) result.violations.push_back("epsilon must be positive");
    if (config.extract.n_nodes < config.extract.fit_degree + 1) {
        result.violations.push_back("n_nodes must be at least fit_degree + 1");
    }
    return result;
}

SweepTable run_sweep(const SweepConfig& config) { return run_sweep_impl(config, true); }

SweepTable run_sweep_serial(const SweepConfig& config) { return run_sweep_impl(config, false); }

void write_csv(const SweepTable& table, const SweepConfig& config, std::ostream& out) {
    const bool full = config.mode == SweepMode::kFull;
    out << "delta_p,p,omega_c_eff,re_chi1,im_chi1,re_chi2,im_chi2,abs_chi2";
    if (full) out << ",oracle_residual_c1,oracle_residual_c2";
    out << ",singular\n";
    for (const SweepRow& row : table) {
        out << format_double(row.delta_p) << ',' << format_double(row.p) << ','
            << format_double(row.omega_c_eff) << ',' << format_double(row.re_chi1) << ','
            << format_double(row.im_chi1) << ',' << format_double(row.re_chi2) << ','
            << format_double(row.im_chi2) << ',' << format_double(row.abs_chi2);
        if (full) {
            out << ',' << format_double(row.oracle_residual_c1) << ','
                << format_double(row.oracle_residual_c2);
        }
        out << ',' << (row.singular ? 1 : 0) << '\n';
    }
}

void write_json(const SweepTable& table, const SweepConfig& config, std::ostream& out) {
    const bool full = config.mode == SweepMode::kFull;
    json rows = json::array();
    for (const SweepRow& row : table) {
        json item = {{"delta_p", row.delta_p},     {"p", row.p},
                     {"omega_c_eff", row.omega_c_eff}, {"re_chi1", row.re_chi1},
                     {"im_chi1", row.im_chi1},     {"re_chi2", row.re_chi2},
                     {"im_chi2", row.im_chi2},     {"abs_chi2", row.abs_chi2}};
        if (full) {
            item["oracle_residual_c1"] = row.oracle_residual_c1;
            item["oracle_residual_c2"] = row.oracle_residual_c2;
        }
        item["singular"] = row.singular;
        rows.push_back(std::move(item));
    }
    out << rows.dump(2) << '\n';
}

void write_output(const SweepTable& table, const SweepConfig& config) {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file \"" + config.output_path + "\"");
    if (config.format == OutputFormat::kCsv) {
        write_csv(table, config, out);
    } else {
        write_json(table, config, out);
    }
    out.flush();
    if (!out) throw IoError("write failure on \"" + config.output_path + "\"");
}

int sweep_thread_count() {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    if (const char* env = std::getenv("SGC_THREADS")) {
        char* end = nullptr;
        const long requested = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && requested > 0 && requested < threads) {
            threads = static_cast<int>(requested);
        }
    }
    return threads;
}

}  // namespace sgc
