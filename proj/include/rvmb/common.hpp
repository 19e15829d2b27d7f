#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rvmb {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootNotBracketed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationFailure : std::runtime_error {
    double last_good_tau;
    IntegrationFailure(const std::string& what, double tau)
        : std::runtime_error(what), last_good_tau(tau) {}
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p0 = sqrt(c^2 + |p|^2), written to stay accurate when |p| << c
inline double energy(const Vec3& p, double c) { return std::sqrt(c * c + p.squaredNorm()); }

inline bool finite(const Vec3& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

}  // namespace rvmb
