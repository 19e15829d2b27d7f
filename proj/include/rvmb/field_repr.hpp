#pragma once

#include "rvmb/common.hpp"
#include "rvmb/quadrature.hpp"

#include <array>
#include <vector>

namespace rvmb::field {

// Angular kernels of the field-gradient representation, all (i,j) at once.
// Entry (i,j) is the kernel with field component i and derivative direction j (0-based).
struct KernelSet {
    Mat3 aA, bA, cA, aB, bB, cB;
    double abs_sum() const;
};

// Kernels at direction omega (|omega| = 1) for particle momentum p; phat = c p / p0
KernelSet kernels(const Vec3& omega, const Vec3& p, double c);

// The six values for one (i,j), 0-based, in the order aA, bA, cA, aB, bB, cB
std::array<double, 6> eval_kernels(const Vec3& omega, const Vec3& p, double c, int i, int j);

// 1 + phat.omega/c, evaluated without cancellation near omega = -p/|p|
double denominator(const Vec3& omega, const Vec3& p, double c);

// sup over omega of (1 + phat.omega/c)^(-m) = (p0 (p0 + |p|)/c^2)^m
double denominator_bound(const Vec3& p, double c, int m);

/// How an angular integral was obtained.
struct AngularRule {
    std::string name;
    std::size_t nodes = 0;
    double cross_check_gap = 0.0;  // |primary - product| before any refinement
    int refinements = 0;
};

struct AngularOptions {
    int lebedev_degree = 27;
    double agree_tol = 1e-10;
    int n_mu = 32, n_phi = 8;
    int max_refine = 5;
    double cluster_ratio = 10.0;  // |p|/c beyond which the clustered rule is used directly
};

// Integral over the sphere of a function returning an Eigen matrix or array.
// Lebedev is primary and a clustered product rule the cross-check; on disagreement
// the product rule is doubled until two levels agree.
template <class F>
auto sphere_integral(F&& f, const Vec3& p, double c, const AngularOptions& opt, AngularRule* info = nullptr);

struct NullCheck {
    Mat3 aA, aB;  // integrals over the sphere
    AngularRule rule;
    double max_abs() const { return std::max(aA.cwiseAbs().maxCoeff(), aB.cwiseAbs().maxCoeff()); }
};

NullCheck angular_null_check(const Vec3& p, double c, const AngularOptions& opt = {});

struct ReferenceIntegrals {
    double I2 = 0.0;       // integral of (sqrt(1+|p|^2/c^2) + p.omega/c)^(-2)
    Vec3 I3;               // integral of (...)^(-3) phat_j
    Vec3 I3_stated;        // 4 pi p_j
    Vec3 I3_closed;        // 4 pi (p0/c) phat_j from the one-dimensional integral
    AngularRule rule;
};

ReferenceIntegrals reference_integrals(const Vec3& p, double c, const AngularOptions& opt = {});

struct GrowthReport {
    std::vector<double> p_norm, value;  // max over omega of kernel sizes (values + p-gradients)
    double slope = 0.0;                 // least-squares slope of log value against log(1+|p|)
    double max_local_slope = 0.0;
    double C = 0.0;                     // max value/(1+|p|)^8
};

// Kernel growth at light speed c over the given |p| values, direction of p fixed
GrowthReport kernel_growth(const std::vector<double>& p_norms, double c, const Vec3& direction = Vec3(0.6, 0.0, 0.8));

}  // namespace rvmb::field

#include "rvmb/field_repr_impl.hpp"
