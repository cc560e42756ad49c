#include "sgc/perturbation.hpp"

#include <cmath>
#include <vector>

#include "sgc/liouvillian.hpp"
#include "sgc/numerics.hpp"

namespace sgc {

namespace {

// Common denominator of the first-order response:
// D = delta_p (gamma2 + gamma3 + i delta_p) - i Omega_c^2.
Complex response_denominator(const SystemParams& params) {
    const double gt = params.gamma2 + params.gamma3;
    const double wc = omega_c_eff(params);
    return params.delta_p * Complex(gt, params.delta_p) - Complex(0.0, wc * wc);
}

Complex checked_denominator(const SystemParams& params) {
    const Complex d = response_denominator(params);
    if (std::abs(d) == 0.0) {
        throw SingularityError(
            "response denominator vanishes (delta_p = 0 with zero effective coupling)");
    }
    return d;
}

template <class Real>
PerturbativeCoefficients extract_orders_impl(const SystemParams& params,
                                             const ExtractOptions& options) {
    using C = std::complex<Real>;
    const int n = options.n_nodes;

    std::vector<Real> x(n);
    std::vector<C> y13(n), y23(n), y11(n);
    for (int k = 0; k < n; ++k) {
        SystemParams probe = params;
        probe.omega_p0 = static_cast<double>(k + 1) * options.epsilon;
        x[k] = static_cast<Real>(effective_rabi(probe.omega_p0, probe.p));
        const auto rho = detail::steady_state_t<Real>(probe, 1e-12);
        y13[k] = rho(0, 2);
        y23[k] = rho(1, 2);
        y11[k] = rho(0, 0);
    }

    const auto fit13 = fit_zero_intercept<Real>(x, y13, options.fit_degree);
    const auto fit23 = fit_zero_intercept<Real>(x, y23, options.fit_degree);
    const auto fit11 = fit_zero_intercept<Real>(x, y11, options.fit_degree);

    const Real residual = std::max({fit13.residual, fit23.residual, fit11.residual});
    // the 1e-6 reduced-unit floor keeps identically-zero responses (where
    // every fitted term is noise) from being flagged as unreliable fits
    const Real scale = std::max({fit13.coeff_scale, fit23.coeff_scale, fit11.coeff_scale,
                                 Real(1e-6)});
    if (residual > static_cast<Real>(options.reliability_factor) * scale) {
        throw ExtractionError("order extraction unreliable: fit residual " +
                              std::to_string(static_cast<double>(residual)) +
                              " out of proportion to the fitted terms");
    }

    PerturbativeCoefficients coeffs;
    coeffs.c13_1 = static_cast<Complex>(fit13.coeffs[0]);
    coeffs.c13_2 = static_cast<Complex>(fit13.coeffs[1]);
    coeffs.c23_2 = static_cast<Complex>(fit23.coeffs[1]);
    coeffs.c11_2 = static_cast<Complex>(fit11.coeffs[1]);
    coeffs.fit_residual = static_cast<double>(residual);
    return coeffs;
}

}  // namespace

Complex rho13_first(const SystemParams& params) {
    require_valid(params);
    return Complex(0.0, params.delta_p) / checked_denominator(params);
}

Complex rho11_second(const SystemParams& params) {
    // stationarity of the |3> population: 2 gamma3 rho11 feeds what the
    // probe removes, leaving Im(c13_1) / gamma3
    return Complex(rho13_first(params).imag() / params.gamma3, 0.0);
}

Complex rho23_second(const SystemParams& params) {
    require_valid(params);
    const Complex d = checked_denominator(params);
    const Complex c1 = Complex(0.0, params.delta_p) / d;
    const double gt = params.gamma2 + params.gamma3;
    const Complex imbalance = std::conj(c1) - c1;  // -2i Im(c13_1)
    return params.p * std::sqrt(params.gamma2 * params.gamma3) * Complex(gt, params.delta_p) *
           imbalance / (params.gamma3 * d);
}

Complex rho13_second(const SystemParams& params) {
    const double gt = params.gamma2 + params.gamma3;
    const double wc = omega_c_eff(params);
    return Complex(0.0, wc) * rho23_second(params) / Complex(gt, params.delta_p);
}

Complex rho13_second_direct(const SystemParams& params) {
    require_valid(params);
    const Complex d = checked_denominator(params);
    const Complex c1 = Complex(0.0, params.delta_p) / d;
    const double wc = omega_c_eff(params);
    const Complex imbalance = std::conj(c1) - c1;
    return Complex(0.0, wc) * params.p * std::sqrt(params.gamma2 * params.gamma3) * imbalance /
           (params.gamma3 * d);
}

PerturbativeCoefficients extract_orders(const SystemParams& params,
                                        const ExtractOptions& options) {
    require_valid(params);
    if (!(options.epsilon > 0.0)) {
        throw std::invalid_argument("extract_orders: epsilon must be positive");
    }
    if (options.n_nodes < options.fit_degree + 1 || options.fit_degree < 2) {
        throw std::invalid_argument("extract_orders: need fit_degree >= 2 and at least "
                                    "fit_degree + 1 nodes");
    }
    if (std::abs(params.p) == 1.0) {
        throw std::invalid_argument(
            "extract_orders: |p| = 1 leaves no effective probe to vary");
    }
    return options.extended_precision ? extract_orders_impl<long double>(params, options)
                                      : extract_orders_impl<double>(params, options);
}

}  // namespace sgc
