// params.hpp - physical parameters of the driven lambda system and the
// geometric relations induced by near-parallel decay dipoles.
//
// Level labels follow the usual convention: |1> is the excited state, |2>
// and |3> the closely spaced lower states. All rates, Rabi frequencies and
// detunings are expressed in units of gamma2 (hbar = 1), so gamma2 = 1.0 is
// the canonical choice.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sgc {

struct SystemParams {
    double gamma2 = 1.0;    // half decay rate |1> -> |2>
    double gamma3 = 1.0;    // half decay rate |1> -> |3>
    double p = 0.0;         // dipole alignment cos(theta), in [-1, 1]
    double omega_c0 = 4.0;  // bare coupling Rabi frequency
    double omega_p0 = 0.1;  // bare probe Rabi frequency
    double delta_p = 0.0;   // probe detuning omega_13 - omega_p (signed)
};

// Geometric reduction of a bare Rabi frequency: each field couples only
// through the sin(theta) component of its transition dipole, with
// sin(theta) = +sqrt(1 - p^2) >= 0. Exactly zero at |p| = 1.
// Throws std::domain_error for |p| > 1.
double effective_rabi(double omega0, double p);

double omega_c_eff(const SystemParams& params);
double omega_p_eff(const SystemParams& params);

struct ValidationResult {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

// Checks the SystemParams invariants. Violations are data, not exceptions.
// |p| = 1 validates but is flagged with a warning: both effective fields
// vanish there and the steady state is no longer unique.
ValidationResult validate_params(const SystemParams& params);

// Throws std::invalid_argument listing the violations, if any.
void require_valid(const SystemParams& params);

// Radiative damping matrix of the two decay channels including their
// vacuum-mediated interference:
//   [ 2*gamma2            2*p*sqrt(gamma2*gamma3) ]
//   [ 2*p*sqrt(...)       2*gamma3                ]
// Positive semidefinite for |p| <= 1, rank one at |p| = 1.
Eigen::Matrix2d cross_decay_matrix(const SystemParams& params);

}  // namespace sgc
