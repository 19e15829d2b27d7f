#include "rvmb/collision.hpp"

#include "rvmb/simd.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rvmb::collision {

Invariants collision_invariants(const Vec3& p, const Vec3& q, double c) {
    if (!finite(p) || !finite(q)) throw DomainError("collision_invariants: non-finite momentum");
    const double p0 = energy(p, c), q0 = energy(q, c);
    const Vec3 d = p - q, sg = p + q;
    const double ds = d.dot(sg) / (p0 + q0);
    double g2 = d.squaredNorm() - ds * ds;
    if (g2 < -1e-12 * c * c) throw NumericError("collision_invariants: negative g^2 beyond rounding");
    g2 = std::max(g2, 0.0);
    Invariants inv;
    inv.g = std::sqrt(g2);
    inv.s = 2.0 * (p0 * q0 - p.dot(q) + c * c);
    inv.vphi = 0.25 * c * inv.g * std::sqrt(inv.s) / (p0 * q0);
    return inv;
}

CmFrame::CmFrame(const Vec3& p, const Vec3& q, double c) : sum(p + q) {
    const Invariants inv = collision_invariants(p, q, c);
    const double e = energy(p, c) + energy(q, c);
    const double rs = std::sqrt(inv.s);
    half_g = 0.5 * inv.g;
    // gamma0 - 1 = |p+q|^2/(sqrt(s)(p0+q0+sqrt(s))), so the projector term never divides by |p+q|
    k = sum.norm() < 1e-10 * e ? 0.0 : 1.0 / (rs * (e + rs));
    vphi = inv.vphi;
}

PostCM post_cm(const Vec3& p, const Vec3& q, const Vec3& omega, double c) {
    if (std::abs(omega.norm() - 1.0) > 1e-12) throw DomainError("post_cm: omega must be a unit vector");
    const CmFrame fr(p, q, c);
    const Invariants inv = collision_invariants(p, q, c);
    const double e = energy(p, c) + energy(q, c);
    PostCM out;
    out.omega = omega;
    out.p = fr.p_out(omega);
    out.q = fr.sum - out.p;
    out.p0 = energy(out.p, c);
    out.q0 = energy(out.q, c);
    const double shift = 0.5 * inv.g / std::sqrt(inv.s) * fr.sum.dot(omega);
    out.p0_formula = 0.5 * e + shift;
    out.q0_formula = 0.5 * e - shift;
    out.gamma0 = e / std::sqrt(inv.s);
    return out;
}

namespace {

struct GsParts {
    double a, B, den;
};

GsParts gs_parts(const Vec3& p, const Vec3& q, const Vec3& omega, double c) {
    const double p0 = energy(p, c), q0 = energy(q, c), e = p0 + q0;
    const double ws = omega.dot(p + q);
    const double den = e * e - ws * ws;
    const double wd = omega.dot(q / q0 - p / p0);
    GsParts r;
    r.den = den;
    r.a = 2.0 * p0 * q0 * e * wd / den;
    r.B = c * e * e * p0 * q0 * std::abs(wd) / (den * den);
    return r;
}

}  // namespace

PostGS post_gs(const Vec3& p, const Vec3& q, const Vec3& omega, double c) {
    if (std::abs(omega.norm() - 1.0) > 1e-12) throw DomainError("post_gs: omega must be a unit vector");
    const GsParts g = gs_parts(p, q, omega, c);
    PostGS out;
    out.a = g.a;
    out.B = g.B;
    out.p = p + g.a * omega;
    out.q = q - g.a * omega;
    out.p0 = energy(out.p, c);
    out.q0 = energy(out.q, c);
    return out;
}

double gs_weight(const Vec3& p, const Vec3& q, const Vec3& omega, double c) {
    const double s = collision_invariants(p, q, c).s;
    return s * gs_parts(p, q, omega, c).B / (energy(p, c) * energy(q, c));
}

JacobianCheck jacobian_gs_check(const Vec3& p, const Vec3& q, const Vec3& omega, double c) {
    const double h = 1e-5 * (1.0 + p.norm() + q.norm());
    auto map = [&](const Eigen::Matrix<double, 6, 1>& x) {
        const PostGS o = post_gs(x.head<3>(), x.tail<3>(), omega, c);
        Eigen::Matrix<double, 6, 1> y;
        y << o.p, o.q;
        return y;
    };
    Eigen::Matrix<double, 6, 1> x;
    x << p, q;
    Eigen::Matrix<double, 6, 6> J;
    for (int j = 0; j < 6; ++j) {
        Eigen::Matrix<double, 6, 1> xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        J.col(j) = (map(xp) - map(xm)) / (2.0 * h);
    }
    JacobianCheck r;
    r.fd_det = J.fullPivLu().determinant();
    if (!std::isfinite(r.fd_det)) throw NumericError("jacobian_gs_check: non-finite finite-difference determinant");
    const PostGS o = post_gs(p, q, omega, c);
    r.closed_form = -o.p0 * o.q0 / (energy(p, c) * energy(q, c));
    return r;
}

FrameResult frame_equivalence(const TestFunction& G, const Vec3& p, const Vec3& q, double c, const FrameOptions& opt) {
    const double p0 = energy(p, c), q0 = energy(q, c);
    const Vec3 sum = p + q, d = p / p0 - q / q0;
    const Vec3 cm_axis = sum.norm() > 1e-12 * (p0 + q0) ? sum : Vec3(0, 0, 1);
    const Vec3 gs_axis = d.norm() > 1e-14 ? d : Vec3(0, 0, 1);
    const CmFrame fr(p, q, c);
    const double s = collision_invariants(p, q, c).s;

    FrameResult res;
    double prev_l = 0.0, prev_r = 0.0;
    for (int n = opt.n_start; n <= opt.n_max; n *= 2) {
        const SphereQuadrature cm = SphereQuadrature::product_axis(cm_axis, n, 2 * n);
        const SphereQuadrature gs = SphereQuadrature::product_axis(gs_axis, n, 2 * n, true);
        double l = 0.0, r = 0.0;
        for (std::size_t k = 0; k < cm.size(); ++k) {
            const Vec3 pp = fr.p_out(cm.nodes[k]);
            l += cm.weights[k] * G(p, q, pp, sum - pp);
        }
        l *= fr.vphi;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            const Vec3& w = gs.nodes[k];
            const GsParts g = gs_parts(p, q, w, c);
            if (g.B == 0.0) continue;
            r += gs.weights[k] * s * g.B / (p0 * q0) * G(p, q, p + g.a * w, q - g.a * w);
        }
        std::ostringstream os;
        os.precision(17);
        os << "n_mu=" << n << " lhs=" << l << " rhs=" << r;
        res.trace.push_back(os.str());
        const bool stable = n > opt.n_start && std::abs(l - prev_l) <= opt.tol * (1.0 + std::abs(l)) &&
                            std::abs(r - prev_r) <= opt.tol * (1.0 + std::abs(r));
        res.lhs = l;
        res.rhs = r;
        prev_l = l;
        prev_r = r;
        if (stable) {
            res.converged = true;
            break;
        }
    }
    return res;
}

namespace {

// Spherical grid about p in which the Maxwellian, a bump of width sigma at distance dist along
// `axis`, gets its own radial panel and polar cap; v_phi keeps its cone point at the origin.
MomentumGrid offset_grid(const Vec3& p, const Vec3& axis, double dist, double sigma, double R, const MomentumRule& rule) {
    const double w = 8.0 * sigma;
    const double a = std::max(0.0, dist - w), b = dist + w;
    Rule1D radial;
    for (const auto& [lo, hi] : {std::pair{0.0, a}, std::pair{a, b}, std::pair{b, R + dist}}) {
        if (hi <= lo) continue;
        const Rule1D r = gauss_legendre(rule.n_radial, lo, hi);
        radial.x.insert(radial.x.end(), r.x.begin(), r.x.end());
        radial.w.insert(radial.w.end(), r.w.begin(), r.w.end());
    }
    // polar cap of half-angle ~ w/dist around the bump, the rest of the sphere separately
    const double mu_cap = std::cos(std::min(kPi, w / dist));
    const int n_mu = (rule.sphere_degree + 1) / 2, n_phi = rule.sphere_degree + 1;
    Rule1D mu = gauss_legendre(n_mu, -1.0, mu_cap);
    const Rule1D cap = gauss_legendre(n_mu, mu_cap, 1.0);
    mu.x.insert(mu.x.end(), cap.x.begin(), cap.x.end());
    mu.w.insert(mu.w.end(), cap.w.begin(), cap.w.end());
    const Mat3 F = frame_from_axis(axis);
    const double dphi = 2.0 * kPi / n_phi;
    MomentumGrid g;
    for (std::size_t i = 0; i < radial.x.size(); ++i) {
        const double r = radial.x[i], wr = radial.w[i] * r * r;
        for (std::size_t j = 0; j < mu.x.size(); ++j) {
            const double st = std::sqrt(std::max(0.0, 1.0 - mu.x[j] * mu.x[j]));
            for (int k = 0; k < n_phi; ++k) {
                const double phi = (k + 0.5) * dphi;
                const Vec3 q = p + r * (F * Vec3(st * std::cos(phi), st * std::sin(phi), mu.x[j]));
                g.px.push_back(q[0]);
                g.py.push_back(q[1]);
                g.pz.push_back(q[2]);
                g.w.push_back(wr * mu.w[j] * dphi);
            }
        }
    }
    return g;
}

MomentumGrid frequency_grid(const thermo::FluidState& st, const Vec3& p, double c, const MomentumRule& rule) {
    const double R = thermo::momentum_radius(st.T, st.u.norm(), c);
    const double dist = (p - st.u).norm();
    const SphereQuadrature sph = SphereQuadrature::lebedev(rule.sphere_degree);
    if (dist >= R) return ball_grid(st.u, R, rule.n_radial, sph);
    // thermal width in the rest frame, stretched by the boost
    const double sigma = thermo::momentum_radius(st.T, 0.0, c) / 12.0 * (st.u0(c) + st.u.norm()) / c;
    if (dist < sigma) return ball_grid(p, R + dist, rule.n_radial, sph);
    return offset_grid(p, (st.u - p) / dist, dist, sigma, R, rule);
}

double frequency_impl(const thermo::FluidState& st, const Vec3& p, double c, double alpha, const MomentumRule& rule) {
    const MomentumGrid grid = frequency_grid(st, p, c, rule);
    const std::size_t n = grid.size();
    std::vector<double> M(n), g(n), s(n), v(n);
    simd::juttner_batch(thermo::juttner_params(st, c), grid.px.data(), grid.py.data(), grid.pz.data(), n, M.data());
    simd::invariants_batch(c, p[0], p[1], p[2], grid.px.data(), grid.py.data(), grid.pz.data(), n, g.data(), s.data(),
                           v.data());
    double acc = 0.0;
    if (alpha == 1.0) {
        for (std::size_t i = 0; i < n; ++i) acc += grid.w[i] * v[i] * M[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) acc += grid.w[i] * v[i] * std::pow(M[i], alpha);
    }
    return kFourPi * acc;
}

}  // namespace

double collision_frequency(const thermo::FluidState& st, const Vec3& p, double c, const MomentumRule& rule) {
    return frequency_impl(st, p, c, 1.0, rule);
}

double collision_frequency_weighted(const thermo::FluidState& st, const Vec3& p, double c, double alpha,
                                    const MomentumRule& rule) {
    if (!(alpha > 0.0)) throw DomainError("collision_frequency_weighted: alpha must be positive");
    return frequency_impl(st, p, c, alpha, rule);
}

CollisionValue q_collision(const Distribution& F, const Distribution& G, const Vec3& p, double c, const Support& sup,
                           const MomentumRule& rule, const SphereQuadrature* omega_rule) {
    const SphereQuadrature sph = SphereQuadrature::lebedev(rule.sphere_degree);
    const double dist = (p - sup.center).norm();
    const MomentumGrid grid = dist < sup.radius ? ball_grid(p, sup.radius + dist, rule.n_radial, sph)
                                                : ball_grid(sup.center, sup.radius, rule.n_radial, sph);
    const SphereQuadrature om = omega_rule ? *omega_rule : SphereQuadrature::lebedev(17);
    const double Fp = F(p);
    CollisionValue out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vec3 q(grid.px[i], grid.py[i], grid.pz[i]);
        const CmFrame fr(p, q, c);
        if (fr.vphi == 0.0) continue;
        double gain = 0.0;
        for (std::size_t k = 0; k < om.size(); ++k) {
            const Vec3 pp = fr.p_out(om.nodes[k]);
            gain += om.weights[k] * F(pp) * G(fr.sum - pp);
        }
        out.gain += grid.w[i] * fr.vphi * gain;
        out.loss += grid.w[i] * fr.vphi * kFourPi * Fp * G(q);
    }
    return out;
}

double kernel_k1(const thermo::FluidState& st, const Vec3& p, const Vec3& q, double c) {
    const Invariants inv = collision_invariants(p, q, c);
    const double mm = std::sqrt(thermo::juttner(st, p, c) * thermo::juttner(st, q, c));
    return kPi * c * inv.g * std::sqrt(inv.s) / (energy(p, c) * energy(q, c)) * mm;
}

KernelBounds kernel_bounds(const Vec3& p, const Vec3& q, const thermo::GlobalMaxwellianParams& gm) {
    if (!(gm.alpha > 0.5 && gm.alpha < 1.0)) throw DomainError("kernel_bounds: alpha must lie in (1/2, 1)");
    const double delta = gm.alpha - 0.5, r = (p - q).norm();
    KernelBounds k;
    k.k1 = r * std::exp(-delta * (p.norm() + q.norm()) / gm.T_M);
    k.k2 = r == 0.0 ? std::numeric_limits<double>::infinity() : std::exp(-0.5 * delta * r / gm.T_M) / r;
    return k;
}

BoundIntegral kernel_bound_integral(const Vec3& p, const thermo::GlobalMaxwellianParams& gm, double ell, int n_radial) {
    if (!(gm.alpha > 0.5 && gm.alpha < 1.0)) throw DomainError("kernel_bound_integral: alpha must lie in (1/2, 1)");
    const double delta = gm.alpha - 0.5, T = gm.T_M;
    // k2 e^{delta r/4T} ~ e^{-delta r/(4T)}/r; go out to where that is e^{-40}
    const double R = 160.0 * T / delta + p.norm();
    const Rule1D rad = gauss_legendre_composite(std::max(4, n_radial / 8), 8, 0.0, R);
    const SphereQuadrature sph = SphereQuadrature::lebedev(41);
    const double wp = weight(p, ell);
    BoundIntegral out;
    for (std::size_t i = 0; i < rad.x.size(); ++i) {
        const double r = rad.x[i];
        for (std::size_t k = 0; k < sph.size(); ++k) {
            const Vec3 q = p + r * sph.nodes[k];
            const double ratio = wp / weight(q, ell), grow = std::exp(0.25 * delta * r / T);
            const double w = rad.w[i] * sph.weights[k];
            // r^2 from the volume element, one power cancels the 1/r of k2
            out.k1_part += w * r * r * r * std::exp(-delta * (p.norm() + q.norm()) / T) * grow * ratio;
            out.k2_part += w * r * std::exp(-0.5 * delta * r / T) * grow * ratio;
        }
    }
    return out;
}

double bump(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    auto psi = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
    const double a = psi(2.0 - r), b = psi(r - 1.0);
    return a / (a + b);
}

Cutoffs region_cutoffs(const Vec3& p, const Vec3& q, double c) {
    const double x1 = bump(energy(p, c) / c);
    const double x2 = bump(2.0 / 3.0 * p.norm() / energy(q, c));
    Cutoffs r;
    r.chi_A = x1 + (1.0 - x1) * x2;
    r.chi_Ac = (1.0 - x1) * (1.0 - x2);
    return r;
}

}  // namespace rvmb::collision
