#include "rvmb/characteristics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <array>
#include <cmath>
#include <random>

namespace rvmb::characteristics {

FieldSampler zero_fields() { return constant_fields(Vec3::Zero(), Vec3::Zero()); }

FieldSampler constant_fields(const Vec3& E, const Vec3& B) {
    FieldSampler f;
    f.E = [E](double, const Vec3&) { return E; };
    f.B = [B](double, const Vec3&) { return B; };
    f.gradE = [](double, const Vec3&) { return Mat3::Zero().eval(); };
    f.gradB = f.gradE;
    f.L = 0.0;
    f.sup = E.norm() + B.norm();
    return f;
}

namespace {

struct Wave {
    Vec3 amp, k;
    double w, phase;
};

struct WaveSum {
    std::vector<Wave> waves;
    Vec3 value(double t, const Vec3& x) const {
        Vec3 v = Vec3::Zero();
        for (const Wave& m : waves) v += m.amp * std::sin(m.k.dot(x) + m.w * t + m.phase);
        return v;
    }
    Mat3 grad(double t, const Vec3& x) const {
        Mat3 g = Mat3::Zero();
        for (const Wave& m : waves) g += std::cos(m.k.dot(x) + m.w * t + m.phase) * m.amp * m.k.transpose();
        return g;
    }
    double sup() const {
        double s = 0.0;
        for (const Wave& m : waves) s += m.amp.norm();
        return s;
    }
    double lip() const {
        double s = 0.0;
        for (const Wave& m : waves) s += m.amp.norm() * m.k.norm();
        return s;
    }
};

WaveSum random_waves(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    WaveSum ws;
    for (int i = 0; i < n; ++i)
        ws.waves.push_back({Vec3(U(rng), U(rng), U(rng)), Vec3(U(rng), U(rng), U(rng)) * 2.0, U(rng), 3.0 * U(rng)});
    return ws;
}

}  // namespace

FieldSampler trig_fields(std::uint64_t seed, double amplitude) {
    std::mt19937_64 rng(seed);
    WaveSum e = random_waves(rng, 3), b = random_waves(rng, 3);
    const double total = e.sup() + b.sup() + std::max(e.lip(), b.lip());
    const double scale = amplitude / total;
    for (auto* ws : {&e, &b})
        for (Wave& m : ws->waves) m.amp *= scale;
    FieldSampler f;
    f.E = [e](double t, const Vec3& x) { return e.value(t, x); };
    f.B = [b](double t, const Vec3& x) { return b.value(t, x); };
    f.gradE = [e](double t, const Vec3& x) { return e.grad(t, x); };
    f.gradB = [b](double t, const Vec3& x) { return b.grad(t, x); };
    f.L = std::max(e.lip(), b.lip());
    f.sup = e.sup() + b.sup();
    return f;
}

namespace {

Mat3 fd_gradient(const VectorField& F, double t, const Vec3& x) {
    const double h = 1e-6 * (1.0 + x.norm());
    Mat3 g;
    for (int l = 0; l < 3; ++l) {
        Vec3 xp = x, xm = x;
        xp[l] += h;
        xm[l] -= h;
        g.col(l) = (F(t, xp) - F(t, xm)) / (2.0 * h);
    }
    return g;
}

// 24 unknowns: X, P, dX (row i = d/dp_i), dP
struct State {
    Vec3 X, P;
    Mat3 dX, dP;
    State operator+(const State& o) const { return {X + o.X, P + o.P, dX + o.dX, dP + o.dP}; }
    State operator*(double a) const { return {a * X, a * P, a * dX, a * dP}; }
};

struct Rhs {
    const FieldSampler& f;
    double c;
    bool variational;

    State operator()(double tau, const State& s) const {
        const double P0 = energy(s.P, c);
        const Vec3 v = s.P / P0;
        const Vec3 B = f.B(tau, s.X);
        State d;
        d.X = c * v;
        d.P = -f.E(tau, s.X) - v.cross(B);
        if (!variational) {
            d.dX.setZero();
            d.dP.setZero();
            return d;
        }
        const Mat3 gE = f.gradE ? f.gradE(tau, s.X) : fd_gradient(f.E, tau, s.X);
        const Mat3 gB = f.gradB ? f.gradB(tau, s.X) : fd_gradient(f.B, tau, s.X);
        for (int i = 0; i < 3; ++i) {
            const Vec3 dPi = s.dP.row(i).transpose(), dXi = s.dX.row(i).transpose();
            // d_{p_i}(P/P0)
            const Vec3 V = (P0 * P0 * dPi - s.P * s.P.dot(dPi)) / (P0 * P0 * P0);
            d.dX.row(i) = (c * V).transpose();
            d.dP.row(i) = (-(gE * dXi) - v.cross(gB * dXi) - V.cross(B)).transpose();
        }
        return d;
    }
};

template <class Out>
void rk4(const Rhs& rhs, State s, double t0, double t1, int steps, Out&& emit) {
    const double h = (t1 - t0) / steps;
    emit(t0, s);
    for (int n = 0; n < steps; ++n) {
        const double t = t0 + n * h;
        const State k1 = rhs(t, s);
        const State k2 = rhs(t + 0.5 * h, s + k1 * (0.5 * h));
        const State k3 = rhs(t + 0.5 * h, s + k2 * (0.5 * h));
        const State k4 = rhs(t + h, s + k3 * h);
        State next = s + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        if (!finite(next.X) || !finite(next.P) || !next.dX.allFinite() || !next.dP.allFinite())
            throw IntegrationFailure("characteristics: non-finite state", t);
        s = next;
        // the last node sits exactly on t1
        emit(n + 1 == steps ? t1 : t0 + (n + 1) * h, s);
    }
}

void check_inputs(const FieldSampler& f, int steps) {
    if (!f.E || !f.B) throw DomainError("characteristics: field sampler needs E and B");
    if (steps < 1) throw DomainError("characteristics: steps must be positive");
}

}  // namespace

std::vector<PhaseState> integrate_characteristics(const PhaseState& init, const FieldSampler& f, double tau_end,
                                                  double c, const Integration& opt) {
    check_inputs(f, opt.steps);
    std::vector<PhaseState> out;
    out.reserve(opt.steps + 1);
    State s{init.X, init.P, Mat3::Zero(), Mat3::Identity()};
    rk4(Rhs{f, c, false}, s, init.t, tau_end, opt.steps,
        [&](double tau, const State& st) { out.push_back({st.X, st.P, tau}); });
    return out;
}

std::vector<VariationalState> variational_jacobian(const PhaseState& init, const FieldSampler& f, double tau_end,
                                                   double c, const Integration& opt) {
    check_inputs(f, opt.steps);
    std::vector<VariationalState> out;
    out.reserve(opt.steps + 1);
    State s{init.X, init.P, Mat3::Zero(), Mat3::Identity()};
    rk4(Rhs{f, c, true}, s, init.t, tau_end, opt.steps,
        [&](double tau, const State& st) { out.push_back({{st.X, st.P, tau}, st.dX, st.dP}); });
    return out;
}

FdJacobian fd_jacobian(const PhaseState& init, const FieldSampler& f, double tau_end, double c, double h,
                       const Integration& opt) {
    FdJacobian J;
    for (int i = 0; i < 3; ++i) {
        PhaseState a = init, b = init;
        a.P[i] += h;
        b.P[i] -= h;
        const PhaseState ea = integrate_characteristics(a, f, tau_end, c, opt).back();
        const PhaseState eb = integrate_characteristics(b, f, tau_end, c, opt).back();
        J.dX.row(i) = ((ea.X - eb.X) / (2.0 * h)).transpose();
        J.dP.row(i) = ((ea.P - eb.P) / (2.0 * h)).transpose();
    }
    return J;
}

Mat3 free_streaming_jacobian(const Vec3& p, double dt, double c) {
    const double p0 = energy(p, c);
    return c * dt * (p0 * p0 * Mat3::Identity() - p * p.transpose()) / (p0 * p0 * p0);
}

BoundsReport jacobian_bounds_check(const FieldSampler& f, double c, const BoundsConfig& cfg) {
    BoundsReport rep;
    rep.horizon = cfg.horizon > 0.0 ? cfg.horizon : default_horizon(f.L);
    rep.min_ratio = std::numeric_limits<double>::infinity();
    rep.min_energy_ratio = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const int steps = cfg.integration.steps;
    for (int k = 0; k < cfg.samples; ++k) {
        Vec3 p;
        do p = Vec3(U(rng), U(rng), U(rng));
        while (p.squaredNorm() > 1.0);
        p *= cfg.p_max;
        const Vec3 x = cfg.x_box * Vec3(U(rng), U(rng), U(rng));
        const double t = rep.horizon, p0 = energy(p, c);
        const auto traj = variational_jacobian({x, p, t}, f, 0.0, c, cfg.integration);
        for (const auto& st : traj) {
            rep.min_energy_ratio = std::min(rep.min_energy_ratio, energy(st.phase.P, c) / p0);
            const double dt = std::abs(t - st.phase.t);
            if (dt > 0.0 && f.sup > 0.0)
                rep.max_drift_ratio = std::max(rep.max_drift_ratio, (st.phase.P - p).norm() / (dt * f.sup));
        }
        for (int m = 1; m <= cfg.taus_per_sample; ++m) {
            const auto& st = traj[static_cast<std::size_t>(m) * steps / cfg.taus_per_sample];
            const double dt = st.phase.t - t;  // tau - t, negative
            const double central = std::pow(c, 5) * std::pow(std::abs(dt), 3) / std::pow(p0, 5);
            const double ratio = std::abs(st.dX.determinant()) / central;
            rep.min_ratio = std::min(rep.min_ratio, ratio);
            rep.max_ratio = std::max(rep.max_ratio, ratio);
            // dX = c dt/p0 (A + dt p0/(2c) K) with K the mean-value second derivative
            const Mat3 K = 2.0 * (st.dX - free_streaming_jacobian(p, dt, c)) / (dt * dt);
            const Mat3 pert = dt * p0 / (2.0 * c) * K;
            const double norm = Eigen::JacobiSVD<Mat3>(pert).singularValues()[0];
            rep.max_perturbation = std::max(rep.max_perturbation, norm);
            ++rep.samples;
        }
    }
    rep.C = std::max(rep.max_ratio, 1.0 / rep.min_ratio);
    return rep;
}

}  // namespace rvmb::characteristics
