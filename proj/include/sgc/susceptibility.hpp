// susceptibility.hpp - reduced linear and second-order probe
// susceptibilities of the medium.
//
// Reduced units: the dimensional prefactors N mu^2 / (eps0 hbar) and
// N mu^3 / (eps0 hbar^2) are set to 1, so chi1 is the first-order and chi2
// the second-order response coefficient of rho13 per power of the
// effective probe Rabi frequency. An optional scale pair restores
// dimensional values for callers that have them.

#pragma once

#include <complex>

#include "sgc/params.hpp"
#include "sgc/perturbation.hpp"

namespace sgc {

// chi1 = i delta_p / [-i Omega_c^2 + delta_p (gamma2 + gamma3 + i delta_p)].
// Identical to rho13_first; Im chi1 >= 0 (the probe is absorbed, never
// amplified), zero exactly at delta_p = 0.
Complex chi1(const SystemParams& params);

// chi2 = 2 Omega_c delta_p^2 p gamma2 (gamma2 + gamma3) /
//        [sqrt(gamma2 gamma3) D^2 conj(D)],
// D = -i (Omega_c^2 - delta_p^2) + delta_p (gamma2 + gamma3).
// Vanishes identically at p = 0 (no interference, no even-order response)
// and at delta_p = 0; |chi2| is even and chi2 odd in p.
Complex chi2(const SystemParams& params);

struct ChiScales {
    double chi1_scale = 1.0;
    double chi2_scale = 1.0;
};

struct ConsistencyReport {
    static constexpr double kTolChi1 = 1e-12;
    static constexpr double kTolChi2 = 1e-10;
    static constexpr double kTolExtracted = 1e-4;

    double chi1_vs_first = 0.0;      // chi1 against rho13_first
    double chi2_vs_second = 0.0;     // chi2 against the chained closed form
    double chi2_vs_extracted = 0.0;  // chi2 against the numeric oracle
    bool pass_chi1 = false;
    bool pass_chi2 = false;
    bool pass_extracted = false;

    bool all_pass() const { return pass_chi1 && pass_chi2 && pass_extracted; }
};

// Cross-checks the three routes to the response coefficients at one
// parameter point. Residuals are floored relative differences (see
// relative_residual); the analytic pair uses a negligible floor, the
// oracle comparison a 1e-6 reduced-unit floor.
ConsistencyReport consistency_report(const SystemParams& params,
                                     const ExtractOptions& options = {});

}  // namespace sgc
