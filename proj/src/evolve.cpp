#include "sgc/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "sgc/liouvillian.hpp"

namespace sgc {

namespace {

// Dormand-Prince 5(4) tableau (FSAL: stage 7 equals the next step's stage 1).
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0, kA53 = 64448.0 / 6561.0,
                 kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                 kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0,
                 kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

double inf_norm(const DensityMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Trajectory evolve(const SystemParams& params, const DensityMatrix& rho0, double t_final,
                  const EvolveOptions& options) {
    require_valid(params);
    if (!(t_final > 0.0)) throw std::invalid_argument("evolve: t_final must be positive");
    if (trace_defect(rho0) > 1e-8 || hermiticity_defect(rho0) > 1e-8) {
        throw std::invalid_argument("evolve: rho0 is not a unit-trace Hermitian state");
    }

    const auto rhs = [&params](const DensityMatrix& y) {
        return detail::equations_of_motion_t<double>(params, y);
    };

    Trajectory traj;
    double t = 0.0;
    DensityMatrix y = rho0;
    DensityMatrix k1 = rhs(y);
    traj.times.push_back(t);
    traj.states.push_back(y);
    if (inf_norm(k1) < options.steady_threshold) {
        traj.converged = true;
        traj.final_residual = inf_norm(k1);
        return traj;
    }

    double h = std::min({options.initial_step, options.max_step, t_final});
    while (t < t_final) {
        if (t_final - t <= 1e-15 * t_final) break;  // within roundoff of the horizon
        h = std::min(h, t_final - t);

        const DensityMatrix k2 = rhs(y + h * (kA21 * k1));
        const DensityMatrix k3 = rhs(y + h * (kA31 * k1 + kA32 * k2));
        const DensityMatrix k4 = rhs(y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
        const DensityMatrix k5 = rhs(y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
        const DensityMatrix k6 =
            rhs(y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
        const DensityMatrix y_next =
            y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
        const DensityMatrix k7 = rhs(y_next);
        const DensityMatrix err =
            h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);

        double ratio = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double scale =
                    options.atol +
                    options.rtol * std::max(std::abs(y(i, j)), std::abs(y_next(i, j)));
                ratio = std::max(ratio, std::abs(err(i, j)) / scale);
            }
        }

        if (ratio <= 1.0) {
            t += h;
            y = y_next;
            k1 = k7;  // FSAL
            traj.times.push_back(t);
            traj.states.push_back(y);
            if (inf_norm(k1) < options.steady_threshold) {
                traj.converged = true;
                break;
            }
        }

        const double factor =
            ratio > 0.0 ? std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0) : 5.0;
        h = std::min(h * factor, options.max_step);
        if (h < 1e-14 * std::max(1.0, t)) {
            traj.final_residual = inf_norm(rhs(y));
            throw IntegrationError("evolve: step size underflow at t = " + std::to_string(t),
                                   std::move(traj));
        }
    }

    traj.final_residual = inf_norm(rhs(y));
    return traj;
}

}  // namespace sgc
