// Acceptance run: one line per criterion with the measured values, the tolerances and the
// wall time against its budget. Exit status is nonzero when any criterion fails.

#include "oracles/bessel_oracle.hpp"
#include "oracles/field_kernels.hpp"
#include "oracles/fit.hpp"
#include "oracles/maxwellian_quad.hpp"
#include "rvmb/characteristics.hpp"
#include "rvmb/collision.hpp"
#include "rvmb/field_repr.hpp"
#include "rvmb/fluid.hpp"
#include "rvmb/macro_matrices.hpp"
#include "rvmb/moments.hpp"
#include "rvmb/special_functions.hpp"
#include "rvmb/thermo.hpp"
#include "rvmb/torus.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rvmb;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Collects named measurements; the criterion passes when every one is within tolerance.
class Outcome {
public:
    void le(const std::string& name, double value, double tol) {
        const bool ok = std::isfinite(value) && value <= tol;
        pass_ = pass_ && ok;
        add(name, value, "<=", tol, ok);
    }
    void ge(const std::string& name, double value, double tol) {
        const bool ok = std::isfinite(value) && value >= tol;
        pass_ = pass_ && ok;
        add(name, value, ">=", tol, ok);
    }
    void info(const std::string& name, double value) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s%s %.3g (info)", detail_.empty() ? "" : "; ", name.c_str(), value);
        detail_ += buf;
    }
    bool pass() const { return pass_; }
    const std::string& detail() const { return detail_; }

private:
    void add(const std::string& name, double value, const char* rel, double tol, bool ok) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s %.3g %s %.3g%s", detail_.empty() ? "" : "; ", name.c_str(), value, rel,
                      tol, ok ? "" : " [X]");
        detail_ += buf;
    }
    bool pass_ = true;
    std::string detail_;
};

struct Criterion {
    int id;
    std::string name;
    double budget;  // seconds
    std::function<void(Outcome&)> run;
};

Vec3 gaussian_vec(std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> N(0.0, 1.0);
    return scale * Vec3(N(rng), N(rng), N(rng));
}

Vec3 unit_vec(std::mt19937_64& rng) { return gaussian_vec(rng, 1.0).normalized(); }

thermo::FluidState admissible_state(std::mt19937_64& rng, double c) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const Vec3 d = gaussian_vec(rng, 1.0).normalized();
    return {0.5 + 1.5 * U(rng), d * 0.25 * c * U(rng), 0.5 + 1.5 * U(rng)};
}

// ---- 1 ----
void bessel_check(Outcome& o) {
    namespace sf = special_functions;
    std::vector<double> zs;
    for (int k = 0; k <= 200; ++k) zs.push_back(0.5 * std::pow(1000.0, k / 200.0));
    const sf::IdentityReport id = sf::bessel_identity_suite(zs);
    o.le("recurrence", id.max_recurrence_rel, 1e-12);
    o.le("derivative", id.max_derivative_rel, 1e-7);
    o.le("monotone violations", id.monotone ? 0.0 : 1.0, 0.0);
    // K_j against Boost where it does not underflow
    double vs_boost = 0.0;
    for (double z : zs)
        if (z < 700)
            for (int j = 0; j <= 4; ++j) {
                const double ref = oracle::bessel_k_boost(j, z);
                vs_boost = std::max(vs_boost, std::abs(sf::bessel_k(j, z).value - ref) / ref);
            }
    o.le("K_j vs boost", vs_boost, 1e-12);
    double ratio = 0.0;
    for (int j = 0; j <= 4; ++j)
        for (int n = 1; n <= 6; ++n)
            for (double z : {2.0, 5.0, 10.0, 30.0, 100.0, 500.0}) {
                if (z < 2 * j) continue;
                const sf::BesselValue a = sf::bessel_k_asymptotic_scaled(j, z, n);
                const double ref = oracle::bessel_k_scaled_quad(j, z);
                ratio = std::max(ratio, std::abs(ref - a.value) / (a.estimated_abs_error + 1e-14 * ref));
            }
    o.le("remainder/bound", ratio, 1.0);
}

// ---- 2 ----
double density_oracle(double T, double S, double c) {
    const double g = c * c / T;
    const double k1 = oracle::bessel_k_boost(1, g), k2 = oracle::bessel_k_boost(2, g);
    return 4 * M_PI * std::exp(4.0) * c * c * c * std::exp(-S) * k2 / g * std::exp(g * k1 / k2);
}

void thermodynamics(Outcome& o) {
    using thermo::FluidState;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> uT(0.5, 2.0), un(0.2, 3.0), uc(1.0, 100.0);
    double forms = 0.0;
    for (int i = 0; i < 200; ++i) {
        const FluidState s{un(rng), Vec3::Zero(), uT(rng)};
        const double c = uc(rng);
        const double a = thermo::energy_density(s, c), b = thermo::energy_density_k1(s, c);
        forms = std::max(forms, std::abs(a - b) / std::abs(a));
    }
    o.le("energy forms", forms, 1e-12);

    double fd_gap = 0.0;
    for (double c : {10.0, 20.0, 50.0})
        for (double n : {0.5, 1.0, 2.0}) {
            const double h = 1e-4;
            auto P = [&](double nn) { return nn * thermo::solve_temperature(nn, {0.0}, c); };
            const double fd = (P(n * (1 + h)) - P(n * (1 - h))) / (2 * n * h);
            const double T = thermo::solve_temperature(n, {0.0}, c);
            fd_gap = std::max(fd_gap, std::abs(fd - n * thermo::enthalpy_derivative(n, T, c)));
        }
    o.le("P'(n) - n h'(n)", fd_gap, 1e-5);

    // temperature from the Boost density, inverted by the library
    double trip = 0.0;
    for (double c : {5.0, 10.0, 20.0})
        for (double T : {0.5, 1.0, 2.0}) {
            if (c * c / T > 700) continue;
            const double n = density_oracle(T, 0.7, c);
            trip = std::max(trip, std::abs(thermo::solve_temperature(n, {0.7}, c) - T) / T);
        }
    o.le("T(n) round trip", trip, 1e-8);

    // T(n = 1) by bracketing the Boost density, against the Newtonian T0
    const std::vector<double> cs{10, 20, 40, 80};
    std::vector<double> err;
    const double T0 = thermo::newtonian_temperature(1.0, 0, {0.0}, 0);
    for (double c : cs) {
        double T = 0.0;
        if (c * c / (2 * T0) < 650) {
            auto f = [&](double t) { return std::log(density_oracle(t, 0.0, c)); };
            boost::math::tools::eps_tolerance<double> tol(50);
            std::uintmax_t it = 200;
            const auto r = boost::math::tools::bisect(f, 0.5 * T0, 2 * T0, tol, it);
            T = 0.5 * (r.first + r.second);
        } else {
            T = thermo::solve_temperature(1.0, {0.0}, c);
        }
        err.push_back(T - T0);
    }
    o.le("|T-expansion slope + 2|", std::abs(oracle::loglog_slope(cs, err) + 2.0), 0.2);
}

// ---- 3 ----
void moments_check(Outcome& o) {
    using namespace moments;
    std::mt19937_64 rng(3);
    double lib_gap = 0.0, box_gap = 0.0;
    for (double c : {2.0, 10.0, 50.0})
        for (int k = 0; k < 4; ++k) {
            const thermo::FluidState s = admissible_state(rng, c);
            const FirstSecond m = first_second_moments(s, c);
            const Tensor3 t3 = boosted_third_moment(s, c);
            const MomentSet q = quadrature_moments(s, c);
            lib_gap = std::max({lib_gap, (q.I - m.I).cwiseAbs().maxCoeff() / m.I.cwiseAbs().maxCoeff(),
                                relative_gap(q.T2, m.T2), relative_gap(q.T3, t3)});
            if (c < 10.0) continue;
            // Cartesian box rule with the textbook density
            const double L = 12.0 * std::sqrt(s.T) * s.u0(c) / c + 2.0;
            const oracle::MomentsOut b = oracle::juttner_moments_box(s.n, {s.u[0], s.u[1], s.u[2]}, s.T, c, L);
            Mat4 T2;
            Tensor3 T3;
            for (int a = 0; a < 4; ++a) {
                box_gap = std::max(box_gap, std::abs(b.I[a] - m.I[a]) / m.I.cwiseAbs().maxCoeff());
                for (int d = 0; d < 4; ++d) {
                    T2(a, d) = b.T2[a][d];
                    for (int e = 0; e < 4; ++e) T3(a, d, e) = b.T3[16 * a + 4 * d + e];
                }
            }
            box_gap = std::max({box_gap, relative_gap(T2, m.T2), relative_gap(T3, t3)});
        }
    o.le("closed vs library quadrature", lib_gap, 1e-5);
    o.le("closed vs Cartesian oracle", box_gap, 1e-5);
    const Mat4 g = Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
    double orth = 0.0;
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (double c : {1.0, 10.0, 100.0})
        for (int k = 0; k < 100; ++k) {
            const Vec3 u = unit_vec(rng) * 0.25 * c * U(rng);
            const Mat4 L = lorentz_boost(u, c);
            orth = std::max(orth, (L.transpose() * g * L - g).cwiseAbs().maxCoeff());
        }
    o.le("boost g-orthogonality", orth, 1e-12);
}

// ---- 4 ----
void collision_exactness(Outcome& o) {
    using namespace collision;
    std::mt19937_64 rng(4);
    double e_rel = 0.0, m_ulp = 0.0, s_rel = 0.0;
    for (double c : {1.0, 10.0, 100.0})
        for (int k = 0; k < 10000; ++k) {
            const double scale = (k % 2) ? c : 3.0;
            const Vec3 p = gaussian_vec(rng, scale), q = gaussian_vec(rng, scale), w = unit_vec(rng);
            const double E = energy(p, c) + energy(q, c);
            const PostCM cm = post_cm(p, q, w, c);
            const PostGS gs = post_gs(p, q, w, c);
            e_rel = std::max({e_rel, std::abs(cm.p0 + cm.q0 - E) / E, std::abs(gs.p0 + gs.q0 - E) / E});
            const double mag = cm.p.norm() + cm.q.norm() + gs.p.norm() + gs.q.norm() + p.norm() + q.norm();
            m_ulp = std::max({m_ulp, ((cm.p + cm.q) - (p + q)).cwiseAbs().maxCoeff() / (kEps * mag),
                              ((gs.p + gs.q) - (p + q)).cwiseAbs().maxCoeff() / (kEps * mag)});
            // g and s are evaluated independently inside the library
            const Invariants inv = collision_invariants(p, q, c);
            s_rel = std::max(s_rel, std::abs(inv.s - inv.g * inv.g - 4 * c * c) / inv.s);
        }
    o.le("momentum (ulp)", m_ulp, 4.0);
    o.le("energy rel", e_rel, 1e-10);
    o.le("s - g^2 - 4c^2 rel", s_rel, 1e-12);
}

// ---- 5 ----
void gs_jacobian(Outcome& o) {
    std::mt19937_64 rng(5);
    double worst = 0.0, lib = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double c = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 10.0 : 100.0);
        const Vec3 p = gaussian_vec(rng, 2.0), q = gaussian_vec(rng, 2.0), w = unit_vec(rng);
        using V6 = Eigen::Matrix<double, 6, 1>;
        auto map = [&](const V6& x) {
            const collision::PostGS r = collision::post_gs(x.head<3>(), x.tail<3>(), w, c);
            V6 y;
            y << r.p, r.q;
            return y;
        };
        V6 x;
        x << p, q;
        // fourth-order central differences
        const double h = 1e-3 * (1.0 + p.norm() + q.norm());
        Eigen::Matrix<double, 6, 6> J;
        for (int i = 0; i < 6; ++i) {
            V6 e = V6::Zero();
            e[i] = h;
            J.col(i) = (map(x - 2 * e) - 8 * map(x - e) + 8 * map(x + e) - map(x + 2 * e)) / (12 * h);
        }
        const collision::PostGS r = collision::post_gs(p, q, w, c);
        const double closed = -r.p0 * r.q0 / (energy(p, c) * energy(q, c));
        worst = std::max(worst, std::abs(J.fullPivLu().determinant() - closed) / std::abs(closed));
        lib = std::max(lib, collision::jacobian_gs_check(p, q, w, c).rel_error());
    }
    o.le("FD det vs closed form", worst, 1e-5);
    o.le("library FD check", lib, 1e-5);
}

// ---- 6 ----
void frame_check(Outcome& o) {
    using namespace collision;
    std::mt19937_64 rng(6);
    double gap = 0.0;
    int unconverged = 0;
    for (int k = 0; k < 20; ++k) {
        const double c = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 5.0 : 50.0);
        const Vec3 a = gaussian_vec(rng, 1.0), b = gaussian_vec(rng, 1.0), shift = gaussian_vec(rng, 0.5);
        const double lam = 0.3 + 0.1 * (k % 5);
        const TestFunction G = [=](const Vec3& p, const Vec3& q, const Vec3& pp, const Vec3& qq) {
            return std::exp(-lam * (pp - shift).squaredNorm() - 0.5 * qq.squaredNorm()) * (1.0 + pp[0] * qq[1]) +
                   0.1 * std::sin(p.dot(q));
        };
        const FrameResult fr = collision::frame_equivalence(G, a, b, c);
        unconverged += !fr.converged;
        gap = std::max(gap, fr.gap() / (1 + std::abs(fr.lhs)));
    }
    o.le("frame gap", gap, 1e-8);
    o.le("unconverged", unconverged, 0.0);

    double annihilation = 0.0;
    for (double c : {1.0, 10.0}) {
        const thermo::FluidState st{1.2, Vec3(0.3, -0.1, 0.2), 0.9};
        const simd::JuttnerParams jp = thermo::juttner_params(st, c);
        const Distribution M = [jp](const Vec3& v) {
            double out;
            simd::scalar::juttner_batch(jp, &v[0], &v[1], &v[2], 1, &out, nullptr);
            return out;
        };
        const Support sup{st.u, thermo::momentum_radius(st.T, st.u.norm(), c)};
        MomentumRule rule;
        rule.n_radial = 32;
        rule.sphere_degree = 17;
        for (const Vec3& p : {Vec3(0, 0, 0), Vec3(1, 0.5, 0), Vec3(-2, 1, 1), Vec3(0.3, -3, 0.5)}) {
            const CollisionValue q = q_collision(M, M, p, c, sup, rule);
            annihilation = std::max(annihilation, std::abs(q.value()) / (collision_frequency(st, p, c) * M(p)));
        }
    }
    o.le("|Q(M,M)|/(nu M)", annihilation, 1e-6);

    using V5 = Eigen::Matrix<double, 5, 1>;
    double moments = 0.0;
    for (double c : {3.0, 10.0, 100.0}) {
        const thermo::FluidState st{1.0, Vec3(0.2, 0, 0), 1.0};
        const simd::JuttnerParams jp = thermo::juttner_params(st, c);
        auto M = [jp](const Vec3& v) {
            double out;
            simd::scalar::juttner_batch(jp, &v[0], &v[1], &v[2], 1, &out, nullptr);
            return out;
        };
        const double eps = 0.1;
        auto phi = [](const Vec3& v) { return 0.3 * v[0] * v[0] - 0.2 * v[1] * v[2] + 0.1 * v[2]; };
        auto factory = [&](const Vec3& p, const Vec3& q) {
            V5 psi;
            psi << 1.0, p[0], p[1], p[2], energy(p, c);
            const double mm = M(p) * M(q), base = (1 + eps * phi(p)) * (1 + eps * phi(q));
            return [=](const Vec3& pp, const Vec3& qq) -> V5 {
                return (mm * ((1 + eps * phi(pp)) * (1 + eps * phi(qq)) - base)) * psi;
            };
        };
        PairGrid grid;
        grid.center = st.u;
        grid.R_P = 0.5 * thermo::momentum_radius(st.T, st.u.norm(), c);
        grid.R_r = 2.0 * grid.R_P;
        grid.n_P = grid.n_r = 24;
        grid.sphere_degree = 17;
        const V5 v = pair_integral<V5>(factory, c, grid, SphereQuadrature::lebedev(5));
        moments = std::max(moments, v.cwiseAbs().maxCoeff());
    }
    o.le("invariant moments", moments, 1e-5);
}

// ---- 7 ----
void frequency_regimes(Outcome& o) {
    const double c = 100.0;
    const thermo::FluidState st{1.0, Vec3::Zero(), 1.0};
    collision::MomentumRule fine;
    fine.n_radial = 128;
    fine.sphere_degree = 41;
    double lo = 1e300, hi = 0.0, resolution = 0.0;
    for (double r : {0.0, 1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0, 10000.0}) {
        const Vec3 p = Vec3(0.6, 0.0, 0.8) * r;
        const double nu = collision::collision_frequency(st, p, c);
        resolution = std::max(resolution, std::abs(collision::collision_frequency(st, p, c, fine) - nu) / nu);
        const double scaled = nu / (r <= c ? 1.0 + r : c);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    o.le("max/min scaled nu", hi / lo, 100.0);
    o.le("rule refinement change", resolution, 1e-6);
    // Cartesian Gauss-Legendre box around the Maxwellian; the cone point of v_phi at q = p
    // sits where M is ~e^-50, so the box rule converges spectrally
    {
        using GL = boost::math::quadrature::gauss<double, 20>;
        const Vec3 p(6.0, 0.0, 8.0);
        const int panels = 12;
        const double L = 12.0, h = 2 * L / panels;
        std::vector<double> x, w;
        for (int k = 0; k < panels; ++k) {
            const double m = -L + (k + 0.5) * h;
            for (std::size_t i = 0; i < GL::abscissa().size(); ++i) {
                const double xi = GL::abscissa()[i], wi = GL::weights()[i];
                x.push_back(m + 0.5 * h * xi);
                w.push_back(0.5 * h * wi);
                if (xi != 0.0) {
                    x.push_back(m - 0.5 * h * xi);
                    w.push_back(0.5 * h * wi);
                }
            }
        }
        const thermo::FluidState s{1.0, Vec3::Zero(), 1.0};
        const double gam = c * c, pref = gam / (4 * M_PI * c * c * c * oracle::bessel_k_scaled_quad(2, gam));
        const double p0 = energy(p, c);
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                for (std::size_t k = 0; k < x.size(); ++k) {
                    const Vec3 q(x[i], x[j], x[k]);
                    const double q0 = energy(q, c);
                    // Moller velocity from the velocity form, textbook Juttner density
                    const Vec3 a = c * p / p0, b = c * q / q0;
                    const double rel = std::sqrt(std::max(0.0, (a - b).squaredNorm() - a.cross(b).squaredNorm() / (c * c)));
                    const double M = pref * std::exp(-(c * q0 - c * c) / s.T);
                    acc += w[i] * w[j] * w[k] * 0.5 * rel * M;
                }
        const double nu = collision::collision_frequency(s, p, c);
        o.le("nu vs Cartesian oracle at |p| = 10", std::abs(nu - kFourPi * acc) / nu, 1e-6);
    }
    o.info("min scaled nu", lo);
    o.info("max scaled nu", hi);
}

// ---- 8 ----
void characteristics_check(Outcome& o) {
    using namespace characteristics;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double zero = 0.0;
    for (int k = 0; k < 10; ++k) {
        const double c = (k % 2) ? 10.0 : 1.0;
        const Vec3 x(U(rng), U(rng), U(rng)), p = Vec3(U(rng), U(rng), U(rng)) * 3.0;
        const auto traj = integrate_characteristics({x, p, 0.3}, zero_fields(), -0.7, c);
        const PhaseState& end = traj.back();
        const Vec3 X = x + c * p / energy(p, c) * (end.t - 0.3);
        zero = std::max({zero, (end.X - X).cwiseAbs().maxCoeff(), (end.P - p).cwiseAbs().maxCoeff()});
    }
    o.le("zero-field exactness", zero, 1e-12);
    double var = 0.0;
    for (int k = 0; k < 50; ++k) {
        const FieldSampler f = trig_fields(100 + k, 1.0);
        const double c = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 10.0 : 100.0);
        const PhaseState init{Vec3(U(rng), U(rng), U(rng)) * 3.0, Vec3(U(rng), U(rng), U(rng)) * 5.0, 0.5};
        const Integration in{512};
        const VariationalState v = variational_jacobian(init, f, 0.0, c, in).back();
        const FdJacobian fd = fd_jacobian(init, f, 0.0, c, 1e-5, in);
        var = std::max({var, (v.dX - fd.dX).cwiseAbs().maxCoeff(), (v.dP - fd.dP).cwiseAbs().maxCoeff()});
    }
    o.le("variational vs FD", var, 1e-6);
    double C = 0.0, pert = 0.0;
    for (std::uint64_t seed : {1, 2, 3})
        for (double c : {1.0, 10.0, 100.0}) {
            BoundsConfig cfg;
            cfg.horizon = 0.05;
            cfg.seed = seed;
            const BoundsReport r = jacobian_bounds_check(trig_fields(seed, 1.0), c, cfg);
            C = std::max(C, r.C);
            pert = std::max(pert, r.max_perturbation);
        }
    o.le("C", C, 4.0);
    o.le("perturbation", pert, 0.25);
}

// ---- 9 ----
void glassey_strauss(Outcome& o) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double null = 0.0, ref = 0.0;
    for (int k = 0; k < 30; ++k) {
        const double c = std::pow(10.0, 2 * U(rng) - 0.5);
        const Vec3 p = unit_vec(rng) * 10 * c * U(rng);
        null = std::max(null, field::angular_null_check(p, c).max_abs());
        const field::ReferenceIntegrals r = field::reference_integrals(p, c);
        ref = std::max(ref, std::abs(r.I2 - kFourPi));
    }
    o.le("null averages", null, 1e-8);
    // literal kernels under adaptive Gauss-Kronrod
    double gk = 0.0;
    for (const Vec3& p : {Vec3(1.0, -2.0, 0.5), Vec3(0.1, 0.2, 0.3)})
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                gk = std::max(gk, std::abs(oracle::sphere_gk(
                                      [&](const Vec3& w) { return oracle::raw_kernels(w, p, 1.0, i, j).aA; }, p)));
                gk = std::max(gk, std::abs(oracle::sphere_gk(
                                      [&](const Vec3& w) { return oracle::raw_kernels(w, p, 1.0, i, j).aB; }, p)));
            }
    o.le("null averages (GK oracle)", gk, 1e-8);
    o.le("|I2 - 4 pi|", ref, 1e-10);
    std::vector<double> ps;
    for (double x = 1; x <= 64; x *= 2) ps.push_back(x);
    const field::GrowthReport g = field::kernel_growth(ps, 1.0);
    o.le("growth exponent", g.max_local_slope, 8.0);
}

// ---- 10 ----
void newtonian_limit(Outcome& o) {
    fluid::NewtonianConfig cfg;
    cfg.grid.N = 512;
    cfg.t_end = 0.5;
    const std::vector<double> cs{10, 20, 40, 80};
    std::vector<double> err, err1, same;
    double gauss = 0.0;
    for (double c : cs) {
        const fluid::NewtonianRow r = fluid::newtonian_run(c, cfg);
        err.push_back(r.error);
        err1.push_back(r.error_first);
        gauss = std::max(gauss, r.gauss_residual);
    }
    cfg.first_order = 0.0;
    for (double c : cs) same.push_back(fluid::newtonian_run(c, cfg).error);
    const double slope = oracle::loglog_slope(cs, err);
    o.le("|slope + 1|", std::abs(slope + 1.0), 0.2);
    o.info("slope", slope);
    o.info("slope vs EP + first order", oracle::loglog_slope(cs, err1));
    o.info("slope, same initial data", oracle::loglog_slope(cs, same));
    o.info("max Gauss residual", gauss);
}

// ---- 11 ----
void curl_div_check(Outcome& o) {
    using namespace fluid;
    Torus3D T(Grid3DPeriodic{32});
    const Grid3DPeriodic& g = T.grid();
    const Field n0 = sample(g, [](double x, double y, double) { return 1.0 + 0.1 * std::cos(x) + 0.05 * std::sin(y); });
    const VecField u0 = T.gradient(sample(g, [](double x, double y, double z) {
        return std::sin(x) * std::sin(y) * std::sin(z) + 0.3 * std::cos(2 * y + z);
    }));
    const CurlDivResult r = curl_div_solve(T, n0, u0, ep_dtE0(T, n0, u0));
    o.le("div B1", r.div_B, 1e-10);
    o.le("curl B1 - f", r.curl_residual, 1e-8);
    // independent check of div B with sixth-order periodic differences
    double fd_div = 0.0;
    const int N = g.N;
    const double h = g.dx();
    auto at = [&](const Field& f, int i, int j, int k) { return f[g.index((i + N) % N, (j + N) % N, (k + N) % N)]; };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                auto d6 = [&](const Field& f, int a) {
                    auto s = [&](int m) {
                        return at(f, i + (a == 0) * m, j + (a == 1) * m, k + (a == 2) * m);
                    };
                    return (45 * (s(1) - s(-1)) - 9 * (s(2) - s(-2)) + (s(3) - s(-3))) / (60 * h);
                };
                fd_div = std::max(fd_div, std::abs(d6(r.B[0], 0) + d6(r.B[1], 1) + d6(r.B[2], 2)));
            }
    o.info("div B1 by 6th-order FD", fd_div);
    o.info("|B1|", sup_norm(r.B));
    const ForcingReport fr = forcing_decomposition_check(T, n0, u0, 1.0, 20, 11);
    o.le("gradient pairing", fr.max_pairing, 1e-10);
    o.le("decomposition residual", fr.decomposition_residual, 1e-10);
}

// ---- 12 ----
void remainder_check(Outcome& o) {
    using namespace fluid;
    Torus3D T(Grid3DPeriodic{32});
    const ExpansionTier tier = manufactured_tier(T);
    const std::vector<double> cs{10, 20, 40, 80, 160};
    std::vector<double> norms;
    double gauss = 0.0, divb = 0.0;
    for (double c : cs) {
        const Remainder r = remainder_residuals(T, tier, c);
        gauss = std::max(gauss, r.gauss);
        divb = std::max(divb, r.div_RB);
        norms.push_back(r.norm);
    }
    o.le("div R_E + 4 pi R_n", gauss, 1e-8);
    o.info("div R_B", divb);
    const double slope = oracle::loglog_slope(cs, norms);
    o.le("|slope + 1|", std::abs(slope + 1.0), 0.1);
    o.info("slope", slope);
}

// ---- 13 ----
void positive_definite(Outcome& o) {
    std::mt19937_64 rng(13);
    const double c = 50.0;
    double min_minor = std::numeric_limits<double>::infinity(), lu_gap = 0.0;
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
        const thermo::FluidState s = admissible_state(rng, c);
        const Eigen::MatrixXd A = fluid::assemble_macro_matrices(s, c).A0;
        const fluid::Definiteness d = fluid::positive_definiteness_check(A);
        bad += !d.positive;
        for (int j = 0; j < 5; ++j) {
            const double det = A.topLeftCorner(j + 1, j + 1).fullPivLu().determinant();
            min_minor = std::min(min_minor, det);
            lu_gap = std::max(lu_gap, std::abs(d.minors[j] - det) / std::abs(det));
        }
    }
    o.le("non-positive states", bad, 0.0);
    o.ge("min leading minor (LU)", min_minor, std::numeric_limits<double>::min());
    o.le("LDLT vs LU minors", lu_gap, 1e-6);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "bessel identities", 5, bessel_check},
        {2, "thermodynamic closure", 10, thermodynamics},
        {3, "moments", 60, moments_check},
        {4, "collision exactness", 30, collision_exactness},
        {5, "GS Jacobian", 30, gs_jacobian},
        {6, "frame equivalence", 300, frame_check},
        {7, "collision frequency regimes", 120, frequency_regimes},
        {8, "characteristics", 120, characteristics_check},
        {9, "Glassey-Strauss identities", 60, glassey_strauss},
        {10, "Newtonian limit rate", 600, newtonian_limit},
        {11, "curl-div system", 60, curl_div_check},
        {12, "remainder residuals", 120, remainder_check},
        {13, "positive definiteness", 5, positive_definite},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.le(std::string("exception: ") + e.what(), 1.0, 0.0);
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = o.pass() && sec < c.budget;
        failed += !ok;
        std::printf("%s %2d %-28s %8.2f s (< %g s)  %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), sec, c.budget,
                    o.detail().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
