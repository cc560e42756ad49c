#include "sgc/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sgc {

double effective_rabi(double omega0, double p) {
    if (std::abs(p) > 1.0) {
        throw std::domain_error("effective_rabi: alignment p must lie in [-1, 1]");
    }
    // (1-p)(1+p) instead of 1-p^2: exact zero at |p| = 1, no cancellation
    return omega0 * std::sqrt((1.0 - p) * (1.0 + p));
}

double omega_c_eff(const SystemParams& params) {
    return effective_rabi(params.omega_c0, params.p);
}

double omega_p_eff(const SystemParams& params) {
    return effective_rabi(params.omega_p0, params.p);
}

ValidationResult validate_params(const SystemParams& params) {
    ValidationResult result;
    auto check_finite = [&result](double value, const char* name) {
        if (!std::isfinite(value)) {
            result.violations.push_back(std::string(name) + " must be finite");
            return false;
        }
        return true;
    };

    if (check_finite(params.gamma2, "gamma2") && !(params.gamma2 > 0.0)) {
        result.violations.push_back("gamma2 must be positive");
    }
    if (check_finite(params.gamma3, "gamma3") && !(params.gamma3 > 0.0)) {
        result.violations.push_back("gamma3 must be positive");
    }
    if (check_finite(params.p, "p") && std::abs(params.p) > 1.0) {
        result.violations.push_back("p out of [-1,1]");
    }
    if (check_finite(params.omega_c0, "omega_c0") && params.omega_c0 < 0.0) {
        result.violations.push_back("omega_c0 must be non-negative");
    }
    if (check_finite(params.omega_p0, "omega_p0") && params.omega_p0 < 0.0) {
        result.violations.push_back("omega_p0 must be non-negative");
    }
    check_finite(params.delta_p, "delta_p");

    if (result.ok() && std::abs(params.p) == 1.0) {
        result.warnings.push_back(
            "|p| = 1: both effective Rabi frequencies vanish; the dynamics is degenerate");
    }
    return result;
}

void require_valid(const SystemParams& params) {
    const ValidationResult result = validate_params(params);
    if (result.ok()) return;
    std::ostringstream msg;
    msg << "invalid parameters:";
    for (const auto& violation : result.violations) msg << " " << violation << ";";
    throw std::invalid_argument(msg.str());
}

Eigen::Matrix2d cross_decay_matrix(const SystemParams& params) {
    require_valid(params);
    const double cross = 2.0 * params.p * std::sqrt(params.gamma2 * params.gamma3);
    Eigen::Matrix2d m;
    m << 2.0 * params.gamma2, cross, cross, 2.0 * params.gamma3;
    return m;
}

}  // namespace sgc
