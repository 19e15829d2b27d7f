#pragma once

#include "rvmb/common.hpp"
#include "rvmb/thermo.hpp"

#include <array>

namespace rvmb::moments {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

// Minkowski metric diag(-1,1,1,1)
Mat4 metric();
Vec4 lower(const Vec4& v);
Vec4 raise(const Vec4& v);

/// Rank-3 tensor with all 64 entries stored.
struct Tensor3 {
    std::array<double, 64> a{};
    double& operator()(int i, int j, int k) { return a[16 * i + 4 * j + k]; }
    double operator()(int i, int j, int k) const { return a[16 * i + 4 * j + k]; }
    double max_abs() const;
    double max_asymmetry() const;  // largest deviation under index permutations
};

struct MomentSet {
    Vec4 I = Vec4::Zero();
    Mat4 T2 = Mat4::Zero();
    Tensor3 T3;
};

// Boost taking the rest frame to bulk velocity u: Lbar (c,0,0,0)^T = (u0, u)
Mat4 lorentz_boost(const Vec3& u, double c);

struct FirstSecond {
    Vec4 I;
    Mat4 T2;
};

FirstSecond first_second_moments(const thermo::FluidState& s, double c);
Tensor3 rest_frame_third_moment(const thermo::FluidState& s, double c);
Tensor3 boosted_third_moment(const thermo::FluidState& s, double c);
Tensor3 contract_boost(const Mat4& L, const Tensor3& t);

struct QuadratureConfig {
    int n_radial = 200;
    int n_mu = 64;
    int n_phi = 128;
};

// int p^a/p0 M, p^a p^b/p0 M, p^a p^b p^c/p0 M over the truncated ball of radius 12 sqrt(T) + 12 |u|
MomentSet quadrature_moments(const thermo::FluidState& s, double c, const QuadratureConfig& cfg = {});

// largest relative entrywise gap, scaled by the largest entry of b
double relative_gap(const Tensor3& a, const Tensor3& b);
double relative_gap(const Mat4& a, const Mat4& b);

}  // namespace rvmb::moments
