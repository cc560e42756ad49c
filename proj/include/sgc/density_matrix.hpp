// density_matrix.hpp - the 3x3 atomic state and its physicality checks.

#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace sgc {

using Complex = std::complex<double>;

// Rows/columns ordered |1>, |2>, |3| (excited state first).
// A physical state is Hermitian, unit trace, positive semidefinite.
using DensityMatrix = Eigen::Matrix3cd;

double trace_defect(const DensityMatrix& rho);        // |tr(rho) - 1|
double hermiticity_defect(const DensityMatrix& rho);  // max_ij |rho_ij - conj(rho_ji)|
double min_eigenvalue(const DensityMatrix& rho);      // of the hermitized matrix

bool is_physical(const DensityMatrix& rho, double trace_tol = 1e-12,
                 double herm_tol = 1e-12, double psd_tol = 1e-10);

DensityMatrix projector(int level);  // |level><level|, level in {0,1,2}

// Random physical state (normalized G G^dagger with Gaussian G).
DensityMatrix random_density_matrix(std::mt19937& rng);

// Random Hermitian matrix, not necessarily positive or normalized.
DensityMatrix random_hermitian(std::mt19937& rng);

}  // namespace sgc
