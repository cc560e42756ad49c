// evolve.hpp - adaptive time integration of the density-matrix equations.

#pragma once

#include <stdexcept>
#include <vector>

#include "sgc/density_matrix.hpp"
#include "sgc/params.hpp"

namespace sgc {

struct EvolveOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    double initial_step = 1e-3;  // units of 1/gamma2
    double max_step = 0.1;
    // ||drho/dt||_inf below this marks the trajectory as converged and
    // stops the integration early.
    double steady_threshold = 1e-10;
};

struct Trajectory {
    std::vector<double> times;          // strictly increasing, units 1/gamma2
    std::vector<DensityMatrix> states;  // one per time
    bool converged = false;
    double final_residual = 0.0;  // ||drho/dt||_inf at the last state

    const DensityMatrix& final_state() const { return states.back(); }
};

// Step size underflowed before reaching t_final; carries the trajectory up
// to the last accepted state.
class IntegrationError : public std::runtime_error {
  public:
    IntegrationError(std::string message, Trajectory partial)
        : std::runtime_error(std::move(message)), partial_(std::move(partial)) {}

    const Trajectory& partial() const { return partial_; }

  private:
    Trajectory partial_;
};

// Integrates d(rho)/dt = equations_of_motion(params, rho) from rho0 over
// [0, t_final] with an embedded Dormand-Prince 5(4) scheme and records
// every accepted step. Throws std::invalid_argument on invalid params or
// an unphysical rho0.
Trajectory evolve(const SystemParams& params, const DensityMatrix& rho0, double t_final,
                  const EvolveOptions& options = {});

}  // namespace sgc
