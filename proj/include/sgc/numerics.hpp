// numerics.hpp - small shared numerical helpers: symmetric grids,
// floored relative residuals, zero-intercept polynomial least squares.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sgc {

// k-th node of an n-point uniform grid on [lo, hi], evaluated as a convex
// combination so the endpoints are exact and the grid is exactly symmetric
// (grid(k) == -grid(n-1-k) when lo == -hi, including an exact 0 midpoint).
inline double grid_point(double lo, double hi, int count, int k) {
    return (lo * static_cast<double>(count - 1 - k) + hi * static_cast<double>(k)) /
           static_cast<double>(count - 1);
}

// |a - b| / max(|a|, |b|, floor). The floor keeps the ratio meaningful when
// the compared quantities vanish; pass something tiny to get a plain
// relative difference.
inline double relative_residual(std::complex<double> a, std::complex<double> b,
                                double floor = 1e-6) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

template <class Real>
struct ZeroInterceptFit {
    // coeffs[d-1] multiplies x^d, d = 1..degree
    std::vector<std::complex<Real>> coeffs;
    Real residual = Real(0);    // max_i |p(x_i) - y_i|
    Real coeff_scale = Real(0); // max_d |coeffs[d-1] * x_max^d|
};

// Least-squares fit of y ~ sum_{d=1..degree} c_d x^d at real abscissas x
// with complex ordinates y. The design matrix is normalized by x_max before
// the QR solve so the monomial basis stays well conditioned.
template <class Real>
ZeroInterceptFit<Real> fit_zero_intercept(const std::vector<Real>& x,
                                          const std::vector<std::complex<Real>>& y, int degree) {
    using C = std::complex<Real>;
    const int n = static_cast<int>(x.size());

    Real x_max = Real(0);
    for (const Real xi : x) x_max = std::max(x_max, std::abs(xi));

    Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic> v(n, degree);
    Eigen::Matrix<C, Eigen::Dynamic, 1> rhs(n);
    for (int i = 0; i < n; ++i) {
        const Real xh = x[i] / x_max;
        Real power = Real(1);
        for (int d = 0; d < degree; ++d) {
            power *= xh;
            v(i, d) = C(power, Real(0));
        }
        rhs(i) = y[i];
    }

    const Eigen::Matrix<C, Eigen::Dynamic, 1> a =
        v.colPivHouseholderQr().solve(rhs).eval();

    ZeroInterceptFit<Real> fit;
    fit.coeffs.resize(degree);
    Real denom = Real(1);
    for (int d = 0; d < degree; ++d) {
        denom *= x_max;
        fit.coeffs[d] = a(d) / denom;
        fit.coeff_scale = std::max(fit.coeff_scale, std::abs(a(d)));
    }
    const Eigen::Matrix<C, Eigen::Dynamic, 1> misfit = (v * a - rhs).eval();
    for (int i = 0; i < n; ++i) fit.residual = std::max(fit.residual, std::abs(misfit(i)));
    return fit;
}

}  // namespace sgc
