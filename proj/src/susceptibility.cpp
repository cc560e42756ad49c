#include "sgc/susceptibility.hpp"

#include <cmath>

#include "sgc/errors.hpp"
#include "sgc/numerics.hpp"

namespace sgc {

Complex chi1(const SystemParams& params) {
    require_valid(params);
    const double gt = params.gamma2 + params.gamma3;
    const double wc = omega_c_eff(params);
    const Complex denom =
        Complex(0.0, -wc * wc) + params.delta_p * Complex(gt, params.delta_p);
    if (std::abs(denom) == 0.0) {
        throw SingularityError("chi1 denominator vanishes (delta_p = 0 with zero coupling)");
    }
    return Complex(0.0, params.delta_p) / denom;
}

Complex chi2(const SystemParams& params) {
    require_valid(params);
    const double gt = params.gamma2 + params.gamma3;
    const double wc = omega_c_eff(params);
    const double dp = params.delta_p;
    const Complex d(dp * gt, -(wc * wc - dp * dp));
    if (std::abs(d) == 0.0) {
        throw SingularityError("chi2 denominator vanishes (delta_p = 0 with zero coupling)");
    }
    const double numerator = 2.0 * wc * dp * dp * params.p * params.gamma2 * gt;
    return numerator / (std::sqrt(params.gamma2 * params.gamma3) * d * d * std::conj(d));
}

ConsistencyReport consistency_report(const SystemParams& params, const ExtractOptions& options) {
    ConsistencyReport report;
    const Complex x1 = chi1(params);
    const Complex x2 = chi2(params);
    const Complex first = rho13_first(params);
    const Complex second = rho13_second(params);
    const PerturbativeCoefficients extracted = extract_orders(params, options);

    report.chi1_vs_first = relative_residual(x1, first, 1e-300);
    report.chi2_vs_second = relative_residual(x2, second, 1e-300);
    report.chi2_vs_extracted = relative_residual(x2, extracted.c13_2, 1e-6);
    report.pass_chi1 = report.chi1_vs_first <= ConsistencyReport::kTolChi1;
    report.pass_chi2 = report.chi2_vs_second <= ConsistencyReport::kTolChi2;
    report.pass_extracted = report.chi2_vs_extracted <= ConsistencyReport::kTolExtracted;
    return report;
}

}  // namespace sgc
