#pragma once

#include "rvmb/common.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rvmb::characteristics {

struct PhaseState {
    Vec3 X = Vec3::Zero();
    Vec3 P = Vec3::Zero();
    double t = 0.0;
};

using VectorField = std::function<Vec3(double, const Vec3&)>;
// G(k,l) = d F_k / d x_l
using GradientField = std::function<Mat3(double, const Vec3&)>;

/// Prescribed E and B. Gradients are optional; central differences are used when absent.
struct FieldSampler {
    VectorField E, B;
    GradientField gradE, gradB;
    double L = 0.0;    // spatial Lipschitz bound of both fields
    double sup = 0.0;  // bound on sup |(E,B)|
};

FieldSampler zero_fields();
FieldSampler constant_fields(const Vec3& E, const Vec3& B);

// Smooth travelling waves with analytic gradients, scaled so sup|(E,B)| + L <= amplitude
FieldSampler trig_fields(std::uint64_t seed, double amplitude);

struct Integration {
    int steps = 2048;
};

// dX/dtau = c P/P0, dP/dtau = -E - (P/P0) x B from init.t to tau_end (either direction), RK4
std::vector<PhaseState> integrate_characteristics(const PhaseState& init, const FieldSampler& f, double tau_end,
                                                  double c, const Integration& opt = {});

struct VariationalState {
    PhaseState phase;
    Mat3 dX;  // dX(i,j) = d X_j / d p_i
    Mat3 dP;
};

// Co-integrates the variational equations; at tau = t, dX = 0 and dP = I
std::vector<VariationalState> variational_jacobian(const PhaseState& init, const FieldSampler& f, double tau_end,
                                                   double c, const Integration& opt = {});

// Central differences of X(tau_end) and P(tau_end) in p
struct FdJacobian {
    Mat3 dX, dP;
};
FdJacobian fd_jacobian(const PhaseState& init, const FieldSampler& f, double tau_end, double c, double h,
                       const Integration& opt = {});

// c (tau - t) ((p0)^2 I - p p^T)/(p0)^3, the zero-field value of dX/dp
Mat3 free_streaming_jacobian(const Vec3& p, double dt, double c);

// Horizon used when the field data only advertise the Lipschitz bound L
inline double default_horizon(double L) { return 0.1 * std::min(1.0, L > 0.0 ? 1.0 / L : 1.0); }

struct BoundsReport {
    int samples = 0;
    double horizon = 0.0;
    double min_ratio = 0.0;  // |det dX/dp| / (c^5 |t - tau|^3 / (p0)^5)
    double max_ratio = 0.0;
    double C = 0.0;               // max(max_ratio, 1/min_ratio)
    double max_perturbation = 0.0;  // |(tau-t) p0/(2c) d^2(dX/dp)/dtau^2| in spectral norm
    double min_energy_ratio = 0.0;  // min P0(tau)/p0
    double max_drift_ratio = 0.0;   // |P(s) - p| / (|t - s| sup|(E,B)|)
    bool lemma_holds(double C_max) const {
        return C <= C_max && max_perturbation <= 0.25 && min_energy_ratio >= 0.5 && max_drift_ratio <= 1.0 + 1e-12;
    }
};

struct BoundsConfig {
    int samples = 50;
    double p_max = 5.0;
    double x_box = 3.0;
    double horizon = 0.0;  // 0 picks default_horizon(L)
    int taus_per_sample = 8;
    std::uint64_t seed = 1;
    Integration integration{};
};

BoundsReport jacobian_bounds_check(const FieldSampler& f, double c, const BoundsConfig& cfg = {});

}  // namespace rvmb::characteristics
