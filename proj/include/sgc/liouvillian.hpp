// liouvillian.hpp - equations of motion of the driven lambda system with
// spontaneous-emission interference, as a direct right-hand side and as a
// 9x9 superoperator, plus the direct steady-state solve.
//
// Vectorization is row-major over levels (1,2,3) x (1,2,3):
//   vec(rho) = (rho11, rho12, rho13, rho21, rho22, rho23, rho31, rho32, rho33)
// so populations sit at indices 0, 4, 8.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "sgc/density_matrix.hpp"
#include "sgc/errors.hpp"
#include "sgc/params.hpp"

namespace sgc {

using LiouvillianMatrix = Eigen::Matrix<Complex, 9, 9>;
using Vector9c = Eigen::Matrix<Complex, 9, 1>;

Vector9c vectorize(const DensityMatrix& rho);
DensityMatrix unvectorize(const Vector9c& v);

// d(rho)/dt. Linear in rho; maps Hermitian to Hermitian and is exactly
// traceless. Defined on arbitrary complex rho via the linear extension
// (conjugate equations carry index-swapped, conjugated coefficients).
DensityMatrix equations_of_motion(const SystemParams& params, const DensityMatrix& rho);

// The same generator as an explicit matrix acting on vec(rho). Built
// entry-by-entry from the equation coefficients, independently of
// equations_of_motion; the two encodings are cross-checked in tests.
LiouvillianMatrix build_liouvillian(const SystemParams& params);

struct SteadyStateOptions {
    // Reciprocal-condition estimate below which the constrained system is
    // declared rank deficient.
    double rcond_threshold = 1e-12;
};

// Unique stationary state of the generator, from the 9x9 linear solve with
// the rho11 row replaced by the trace constraint. Throws
// NonUniqueSteadyStateError when the constrained system is rank deficient
// (e.g. both effective fields zero). Throws std::invalid_argument on
// invalid params.
DensityMatrix steady_state(const SystemParams& params, const SteadyStateOptions& options = {});

namespace detail {

// Scalar-generic core shared by the double API above and the extended
// precision order-extraction oracle.

template <class Real>
Eigen::Matrix<std::complex<Real>, 3, 3> equations_of_motion_t(
    const SystemParams& pr, const Eigen::Matrix<std::complex<Real>, 3, 3>& r) {
    using C = std::complex<Real>;
    const Real g2 = static_cast<Real>(pr.gamma2);
    const Real g3 = static_cast<Real>(pr.gamma3);
    const Real gt = g2 + g3;
    const Real dp = static_cast<Real>(pr.delta_p);
    const Real pa = static_cast<Real>(pr.p);
    const Real wc = static_cast<Real>(pr.omega_c0) * std::sqrt((Real(1) - pa) * (Real(1) + pa));
    const Real wp = static_cast<Real>(pr.omega_p0) * std::sqrt((Real(1) - pa) * (Real(1) + pa));
    const Real sgc = Real(2) * pa * std::sqrt(g2 * g3);
    const C i(Real(0), Real(1));

    Eigen::Matrix<C, 3, 3> d;
    // populations: total decay out of |1>, branching into |2> and |3>,
    // coherent exchange with both fields (rho22 closed by trace conservation)
    d(0, 0) = -Real(2) * gt * r(0, 0) + i * wp * (r(2, 0) - r(0, 2)) + i * wc * (r(1, 0) - r(0, 1));
    d(1, 1) = Real(2) * g2 * r(0, 0) + i * wc * (r(0, 1) - r(1, 0));
    d(2, 2) = Real(2) * g3 * r(0, 0) + i * wp * (r(0, 2) - r(2, 0));
    // optical coherences
    d(0, 1) = -gt * r(0, 1) + i * wp * r(2, 1) - i * wc * (r(0, 0) - r(1, 1));
    d(1, 0) = -gt * r(1, 0) - i * wp * r(1, 2) + i * wc * (r(0, 0) - r(1, 1));
    d(0, 2) = -(gt + i * dp) * r(0, 2) - i * wp * (r(0, 0) - r(2, 2)) + i * wc * r(1, 2);
    d(2, 0) = -(gt - i * dp) * r(2, 0) + i * wp * (r(0, 0) - r(2, 2)) - i * wc * r(2, 1);
    // lower-level coherence: undamped rotation plus the real interference
    // source 2 p sqrt(g2 g3) rho11 feeding both rho23 and rho32
    d(1, 2) = -i * dp * r(1, 2) + sgc * r(0, 0) + i * wc * r(0, 2) - i * wp * r(1, 0);
    d(2, 1) = i * dp * r(2, 1) + sgc * r(0, 0) - i * wc * r(2, 0) + i * wp * r(0, 1);
    return d;
}

template <class Real>
Eigen::Matrix<std::complex<Real>, 9, 9> build_liouvillian_t(const SystemParams& pr) {
    using C = std::complex<Real>;
    const Real g2 = static_cast<Real>(pr.gamma2);
    const Real g3 = static_cast<Real>(pr.gamma3);
    const Real gt = g2 + g3;
    const Real dp = static_cast<Real>(pr.delta_p);
    const Real pa = static_cast<Real>(pr.p);
    const Real wc = static_cast<Real>(pr.omega_c0) * std::sqrt((Real(1) - pa) * (Real(1) + pa));
    const Real wp = static_cast<Real>(pr.omega_p0) * std::sqrt((Real(1) - pa) * (Real(1) + pa));
    const Real sgc = Real(2) * pa * std::sqrt(g2 * g3);
    const C iwc(Real(0), wc), iwp(Real(0), wp), idp(Real(0), dp);

    Eigen::Matrix<C, 9, 9> l = Eigen::Matrix<C, 9, 9>::Zero();
    // row 0: rho11
    l(0, 0) = -Real(2) * gt;
    l(0, 6) = iwp;
    l(0, 2) = -iwp;
    l(0, 3) = iwc;
    l(0, 1) = -iwc;
    // row 1: rho12
    l(1, 1) = -gt;
    l(1, 7) = iwp;
    l(1, 0) = -iwc;
    l(1, 4) = iwc;
    // row 2: rho13
    l(2, 2) = C(-gt, -dp);
    l(2, 0) = -iwp;
    l(2, 8) = iwp;
    l(2, 5) = iwc;
    // row 3: rho21
    l(3, 3) = -gt;
    l(3, 5) = -iwp;
    l(3, 0) = iwc;
    l(3, 4) = -iwc;
    // row 4: rho22
    l(4, 0) = Real(2) * g2;
    l(4, 1) = iwc;
    l(4, 3) = -iwc;
    // row 5: rho23
    l(5, 5) = -idp;
    l(5, 0) = sgc;
    l(5, 2) = iwc;
    l(5, 3) = -iwp;
    // row 6: rho31
    l(6, 6) = C(-gt, dp);
    l(6, 0) = iwp;
    l(6, 8) = -iwp;
    l(6, 7) = -iwc;
    // row 7: rho32
    l(7, 7) = idp;
    l(7, 0) = sgc;
    l(7, 6) = -iwc;
    l(7, 1) = iwp;
    // row 8: rho33
    l(8, 0) = Real(2) * g3;
    l(8, 2) = iwp;
    l(8, 6) = -iwp;
    return l;
}

// Constrained linear solve for the stationary state. Solves for the
// deviation from the trap state |3><3| so that small coherences are
// resolved with relative rather than absolute accuracy.
template <class Real>
Eigen::Matrix<std::complex<Real>, 3, 3> steady_state_t(const SystemParams& pr,
                                                       double rcond_threshold) {
    using C = std::complex<Real>;
    using Mat9 = Eigen::Matrix<C, 9, 9>;
    using Vec9 = Eigen::Matrix<C, 9, 1>;

    Mat9 a = build_liouvillian_t<Real>(pr);
    a.row(0).setZero();
    a(0, 0) = a(0, 4) = a(0, 8) = C(Real(1), Real(0));

    Vec9 trap = Vec9::Zero();
    trap(8) = C(Real(1), Real(0));
    Vec9 rhs = -(a * trap);
    rhs(0) += C(Real(1), Real(0));  // trace of the full state is 1

    Eigen::PartialPivLU<Mat9> lu(a);
    // rcond() is only meaningful for invertible matrices (it reports a
    // healthy value on exactly singular input); the pivot ratio catches
    // that case.
    const auto pivots = lu.matrixLU().diagonal().cwiseAbs().eval();
    const Real pivot_max = pivots.maxCoeff();
    const Real pivot_ratio = pivot_max > Real(0) ? pivots.minCoeff() / pivot_max : Real(0);
    const Real rc = lu.rcond();
    const Real threshold = static_cast<Real>(rcond_threshold);
    if (!(pivot_ratio >= threshold) || !(rc >= threshold)) {
        throw NonUniqueSteadyStateError(static_cast<double>(std::min(pivot_ratio, rc)));
    }
    const Vec9 dev = lu.solve(rhs);

    Eigen::Matrix<C, 3, 3> rho;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            rho(i, j) = trap(3 * i + j) + dev(3 * i + j);
        }
    }
    rho = ((rho + rho.adjoint()) / Real(2)).eval();
    return rho;
}

}  // namespace detail

}  // namespace sgc
