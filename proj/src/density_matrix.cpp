#include "sgc/density_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace sgc {

double trace_defect(const DensityMatrix& rho) { return std::abs(rho.trace() - Complex(1.0)); }

double hermiticity_defect(const DensityMatrix& rho) {
    return (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const DensityMatrix& rho) {
    const DensityMatrix h = (rho + rho.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool is_physical(const DensityMatrix& rho, double trace_tol, double herm_tol, double psd_tol) {
    return trace_defect(rho) <= trace_tol && hermiticity_defect(rho) <= herm_tol &&
           min_eigenvalue(rho) >= -psd_tol;
}

DensityMatrix projector(int level) {
    DensityMatrix rho = DensityMatrix::Zero();
    rho(level, level) = 1.0;
    return rho;
}

DensityMatrix random_density_matrix(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DensityMatrix g;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    }
    DensityMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

DensityMatrix random_hermitian(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DensityMatrix a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return (a + a.adjoint().eval()) / 2.0;
}

}  // namespace sgc
