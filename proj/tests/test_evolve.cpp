#include <random>

#include <doctest.h>

#include "sgc/evolve.hpp"
#include "sgc/liouvillian.hpp"

using namespace sgc;

namespace {

SystemParams reference_params(double p) {
    SystemParams params;
    params.gamma2 = 1.0;
    params.gamma3 = 1.0;
    params.omega_c0 = 4.0;
    params.omega_p0 = 0.1;
    params.delta_p = 2.0;
    params.p = p;
    return params;
}

}  // namespace

TEST_CASE("trajectory is constant at a fixed point") {
    SystemParams params = reference_params(0.0);
    params.omega_p0 = 0.0;
    const Trajectory traj = evolve(params, projector(2), 10.0);
    CHECK(traj.converged);
    CHECK(traj.final_residual == 0.0);
    for (const DensityMatrix& state : traj.states) {
        CHECK((state - projector(2)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("trace is conserved along the trajectory") {
    const SystemParams params = reference_params(0.99);
    const DensityMatrix rho0 = DensityMatrix::Identity() / 3.0;
    const Trajectory traj = evolve(params, rho0, 50.0);
    REQUIRE(traj.times.size() == traj.states.size());
    for (std::size_t k = 1; k < traj.times.size(); ++k) {
        CHECK(traj.times[k] > traj.times[k - 1]);
    }
    for (const DensityMatrix& state : traj.states) {
        CHECK(trace_defect(state) <= 1e-10);
        CHECK(hermiticity_defect(state) <= 1e-10);
    }
}

TEST_CASE("long-time evolution agrees with the direct steady state") {
    // fast relaxation: converges well before the horizon
    SystemParams params = reference_params(0.0);
    const Trajectory traj = evolve(params, DensityMatrix::Identity() / 3.0, 100.0);
    CHECK(traj.converged);
    CHECK((traj.final_state() - steady_state(params)).cwiseAbs().maxCoeff() <= 1e-8);

    // weak effective coupling: relaxation time ~ 1/0.15, needs a longer run
    params = reference_params(0.99);
    const Trajectory slow = evolve(params, DensityMatrix::Identity() / 3.0, 400.0);
    CHECK(slow.converged);
    CHECK((slow.final_state() - steady_state(params)).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("positivity is preserved from random physical states") {
    std::mt19937 rng(707);
    std::uniform_real_distribution<double> align_range(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const SystemParams params = reference_params(align_range(rng));
        const Trajectory traj = evolve(params, random_density_matrix(rng), 20.0);
        for (const DensityMatrix& state : traj.states) {
            CHECK(min_eigenvalue(state) >= -1e-8);
        }
    }
}

TEST_CASE("unreachable tolerance underflows the step size") {
    const SystemParams params = reference_params(0.5);
    EvolveOptions options;
    options.rtol = 1e-300;
    options.atol = 1e-300;
    const DensityMatrix rho0 = DensityMatrix::Identity() / 3.0;
    try {
        evolve(params, rho0, 10.0, options);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& error) {
        // the last good state survives in the partial trajectory
        CHECK_FALSE(error.partial().states.empty());
        CHECK(trace_defect(error.partial().states.back()) <= 1e-10);
    }
}

TEST_CASE("evolve rejects bad inputs") {
    const SystemParams params = reference_params(0.0);
    CHECK_THROWS_AS(evolve(params, DensityMatrix::Identity() / 3.0, -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve(params, DensityMatrix::Identity(), 1.0), std::invalid_argument);
    DensityMatrix skew = DensityMatrix::Identity() / 3.0;
    skew(0, 1) = Complex(0.5, 0.0);  // not Hermitian against skew(1,0) = 0
    CHECK_THROWS_AS(evolve(params, skew, 1.0), std::invalid_argument);
}
