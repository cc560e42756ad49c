#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sgc {

namespace detail {
inline std::string format_scientific(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3g", value);
    return buffer;
}
}  // namespace detail

// The constrained steady-state system is rank deficient: both effective
// fields vanish (or |p| = 1) and the stationary state is not unique.
class NonUniqueSteadyStateError : public std::runtime_error {
  public:
    explicit NonUniqueSteadyStateError(double rcond)
        : std::runtime_error("steady state is not unique (reciprocal condition estimate " +
                             detail::format_scientific(rcond) + " below threshold)"),
          rcond_(rcond) {}

    double rcond() const { return rcond_; }

  private:
    double rcond_;
};

// A closed-form response denominator vanished (delta_p = 0 with zero
// effective coupling).
class SingularityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The order-extraction least-squares fit cannot be trusted.
class ExtractionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// File output failed; the message carries the path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or invalid sweep configuration.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace sgc
