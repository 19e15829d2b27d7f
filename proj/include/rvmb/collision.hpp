#pragma once

#include "rvmb/common.hpp"
#include "rvmb/quadrature.hpp"
#include "rvmb/thermo.hpp"

#include <functional>
#include <string>
#include <type_traits>
#include <vector>

namespace rvmb::collision {

struct Invariants {
    double g = 0.0;
    double s = 0.0;
    double vphi = 0.0;
};

// g, s and the Moller velocity v_phi = (c/4) g sqrt(s)/(p0 q0)
Invariants collision_invariants(const Vec3& p, const Vec3& q, double c);

/// Post-collision state in the center-of-momentum parametrization.
struct PostCM {
    Vec3 p, q;               // p', q'
    double p0 = 0, q0 = 0;   // on-shell energies sqrt(c^2 + |p'|^2)
    double p0_formula = 0;   // (p0+q0)/2 + g/(2 sqrt s) (p+q).omega
    double q0_formula = 0;
    Vec3 omega;
    double gamma0 = 1.0;     // (p0+q0)/sqrt(s)
};

PostCM post_cm(const Vec3& p, const Vec3& q, const Vec3& omega, double c);

/// Post-collision state in the Glassey-Strauss parametrization.
struct PostGS {
    Vec3 p, q;  // p'' = p + a omega, q'' = q - a omega
    double p0 = 0, q0 = 0;
    double a = 0.0;
    double B = 0.0;  // kernel factor, so the angular weight is s B/(p0 q0)
};

PostGS post_gs(const Vec3& p, const Vec3& q, const Vec3& omega, double c);

// s B/(p0 q0): the GS angular weight that replaces v_phi
double gs_weight(const Vec3& p, const Vec3& q, const Vec3& omega, double c);

struct JacobianCheck {
    double fd_det = 0.0;
    double closed_form = 0.0;  // -p''0 q''0/(p0 q0)
    double rel_error() const { return std::abs(fd_det - closed_form) / std::abs(closed_form); }
};

// 6x6 central-difference determinant of (p,q) -> (p'',q''), step 1e-5 (1 + |p| + |q|)
JacobianCheck jacobian_gs_check(const Vec3& p, const Vec3& q, const Vec3& omega, double c);

using TestFunction = std::function<double(const Vec3&, const Vec3&, const Vec3&, const Vec3&)>;

struct FrameOptions {
    int n_start = 16;   // mu nodes on the first level (per hemisphere on the GS side)
    int n_max = 256;
    double tol = 1e-12;  // relative change between levels that counts as converged
};

struct FrameResult {
    double lhs = 0.0;  // int v_phi G(p,q,p',q') domega
    double rhs = 0.0;  // int s B/(p0 q0) G(p,q,p'',q'') domega
    bool converged = false;
    std::vector<std::string> trace;
    double gap() const { return std::abs(lhs - rhs); }
};

// Both sides by product rules refined until stable. The GS side is split on the
// equator of d = p/p0 - q/q0, where |omega.d| has its kink.
FrameResult frame_equivalence(const TestFunction& G, const Vec3& p, const Vec3& q, double c,
                              const FrameOptions& opt = {});

struct MomentumRule {
    int n_radial = 64;
    int sphere_degree = 27;  // Lebedev
};

// nu_c(p) = 4 pi int v_phi(p,q) M(q) dq. Spherical coordinates are centred at p when p lies
// inside the Maxwellian ball (v_phi has a cone point at q = p), otherwise at the bulk velocity.
double collision_frequency(const thermo::FluidState& st, const Vec3& p, double c, const MomentumRule& rule = {});

// int int v_phi M^alpha(q) domega dq, the weighted variant
double collision_frequency_weighted(const thermo::FluidState& st, const Vec3& p, double c, double alpha,
                                    const MomentumRule& rule = {});

using Distribution = std::function<double(const Vec3&)>;

struct CollisionValue {
    double gain = 0.0;
    double loss = 0.0;
    double value() const { return gain - loss; }
};

/// Support of the q-integration for q_collision.
struct Support {
    Vec3 center = Vec3::Zero();
    double radius = 12.0;
};

// Q_c(F,G)(p) in the CM form
CollisionValue q_collision(const Distribution& F, const Distribution& G, const Vec3& p, double c, const Support& sup,
                           const MomentumRule& rule = {}, const SphereQuadrature* omega_rule = nullptr);

// k_c1(p,q) = pi c g sqrt(s)/(p0 q0) sqrt(M(p) M(q))
double kernel_k1(const thermo::FluidState& st, const Vec3& p, const Vec3& q, double c);

struct KernelBounds {
    double k1 = 0.0;
    double k2 = 0.0;  // infinite at p = q
};

// k1 = |p-q| e^{-delta |p|/T_M} e^{-delta |q|/T_M}, k2 = e^{-delta |p-q|/(2 T_M)}/|p-q|, delta = alpha - 1/2
KernelBounds kernel_bounds(const Vec3& p, const Vec3& q, const thermo::GlobalMaxwellianParams& gm);

inline double weight(const Vec3& p, double ell) { return std::pow(1.0 + p.squaredNorm(), 0.5 * ell); }

struct BoundIntegral {
    double k1_part = 0.0;
    double k2_part = 0.0;
    double total() const { return k1_part + k2_part; }
};

// int k_w(p,q) e^{delta |p-q|/(4 T_M)} dq with k_w = (k1 + k2) w_l(p)/w_l(q)
BoundIntegral kernel_bound_integral(const Vec3& p, const thermo::GlobalMaxwellianParams& gm, double ell,
                                    int n_radial = 96);

// C-infinity bump: 1 on [0,1], 0 on [2, inf)
double bump(double r);

struct Cutoffs {
    double chi_A = 0.0;
    double chi_Ac = 0.0;
};

Cutoffs region_cutoffs(const Vec3& p, const Vec3& q, double c);

/// Nodes for (p,q) double integrals: P = (p+q)/2 around `center`, r = p - q around 0,
/// both spherical, so g stays smooth in (P, r).
struct PairGrid {
    Vec3 center = Vec3::Zero();
    double R_P = 12.0, R_r = 24.0;
    int n_P = 24, n_r = 24;
    int sphere_degree = 17;
};

/// p', q' for fixed (p,q) as omega varies; everything not depending on omega is cached.
struct CmFrame {
    Vec3 sum;
    double half_g = 0.0;
    double k = 0.0;  // (gamma0 - 1)/|p+q|^2 = 1/(sqrt(s)(p0+q0+sqrt(s)))
    double vphi = 0.0;

    CmFrame(const Vec3& p, const Vec3& q, double c);
    Vec3 p_out(const Vec3& omega) const { return 0.5 * sum + half_g * (omega + k * sum * sum.dot(omega)); }
};

// int dp int dq int domega v_phi h(p,q)(p',q'). The factory h is called once per (p,q) pair and
// returns the omega integrand, so pair-only work stays out of the angular loop. R may be a
// double or a fixed-size Eigen vector.
template <class R>
R zero_of() {
    if constexpr (std::is_arithmetic_v<R>) {
        return R(0);
    } else {
        return R::Zero();
    }
}

template <class R, class Factory>
R pair_integral(Factory&& h, double c, const PairGrid& grid, const SphereQuadrature& omega_rule) {
    const MomentumGrid gP = ball_grid(grid.center, grid.R_P, grid.n_P, SphereQuadrature::lebedev(grid.sphere_degree));
    const MomentumGrid gr = ball_grid(Vec3::Zero(), grid.R_r, grid.n_r, SphereQuadrature::lebedev(grid.sphere_degree));
    R total = zero_of<R>();
    for (std::size_t a = 0; a < gP.size(); ++a) {
        const Vec3 P(gP.px[a], gP.py[a], gP.pz[a]);
        R inner = zero_of<R>();
        for (std::size_t b = 0; b < gr.size(); ++b) {
            const Vec3 r(gr.px[b], gr.py[b], gr.pz[b]);
            const Vec3 p = P + 0.5 * r, q = P - 0.5 * r;
            const CmFrame fr(p, q, c);
            if (fr.vphi == 0.0) continue;
            auto k = h(p, q);
            R ang = zero_of<R>();
            for (std::size_t j = 0; j < omega_rule.size(); ++j) {
                const Vec3 pp = fr.p_out(omega_rule.nodes[j]);
                ang += omega_rule.weights[j] * k(pp, fr.sum - pp);
            }
            inner += (gr.w[b] * fr.vphi) * ang;
        }
        total += gP.w[a] * inner;
    }
    return total;
}

}  // namespace rvmb::collision
