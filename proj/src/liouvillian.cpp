#include "sgc/liouvillian.hpp"

namespace sgc {

Vector9c vectorize(const DensityMatrix& rho) {
    Vector9c v;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) v(3 * i + j) = rho(i, j);
    }
    return v;
}

DensityMatrix unvectorize(const Vector9c& v) {
    DensityMatrix rho;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) rho(i, j) = v(3 * i + j);
    }
    return rho;
}

DensityMatrix equations_of_motion(const SystemParams& params, const DensityMatrix& rho) {
    require_valid(params);
    return detail::equations_of_motion_t<double>(params, rho);
}

LiouvillianMatrix build_liouvillian(const SystemParams& params) {
    require_valid(params);
    return detail::build_liouvillian_t<double>(params);
}

DensityMatrix steady_state(const SystemParams& params, const SteadyStateOptions& options) {
    require_valid(params);
    return detail::steady_state_t<double>(params, options.rcond_threshold);
}

}  // namespace sgc
