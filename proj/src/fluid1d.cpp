#include "rvmb/fluid.hpp"
#include "rvmb/special_functions.hpp"
#include "rvmb/thermo.hpp"

#include <fftw3.h>
#include <gsl/gsl_spline.h>

#include <algorithm>
#include <cmath>

namespace rvmb::fluid {

namespace sf = rvmb::special_functions;

void Grid1D::validate() const {
    if (N < 8) throw DomainError("Grid1D: N must be at least 8");
    if (!(L > 0.0)) throw DomainError("Grid1D: length must be positive");
}

Polytrope Polytrope::from_entropy(double S) { return {std::exp(2.0 * S / 3.0 - 5.0 / 3.0) / (2.0 * kPi)}; }

double entropy_for(double n, double T) {
    const double K = T / std::pow(n, 2.0 / 3.0);
    return 1.5 * (std::log(2.0 * kPi * K) + 5.0 / 3.0);
}

// ---------------------------------------------------------------------------
// FFT

struct Spectral1D::Plans {
    double* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd = nullptr, bwd = nullptr;
};

Spectral1D::Spectral1D(const Grid1D& g) : g_(g), p_(std::make_unique<Plans>()) {
    g_.validate();
    p_->in = fftw_alloc_real(g_.N);
    p_->out = fftw_alloc_complex(g_.N / 2 + 1);
    p_->fwd = fftw_plan_dft_r2c_1d(g_.N, p_->in, p_->out, FFTW_ESTIMATE);
    p_->bwd = fftw_plan_dft_c2r_1d(g_.N, p_->out, p_->in, FFTW_ESTIMATE);
}

Spectral1D::~Spectral1D() {
    fftw_destroy_plan(p_->fwd);
    fftw_destroy_plan(p_->bwd);
    fftw_free(p_->in);
    fftw_free(p_->out);
}

std::vector<std::complex<double>> Spectral1D::forward(const Field& f) const {
    std::copy(f.begin(), f.end(), p_->in);
    fftw_execute(p_->fwd);
    std::vector<std::complex<double>> F(g_.N / 2 + 1);
    for (int m = 0; m <= g_.N / 2; ++m) F[m] = {p_->out[m][0], p_->out[m][1]};
    return F;
}

Field Spectral1D::backward(const std::vector<std::complex<double>>& F) const {
    for (int m = 0; m <= g_.N / 2; ++m) {
        p_->out[m][0] = F[m].real();
        p_->out[m][1] = F[m].imag();
    }
    fftw_execute(p_->bwd);
    Field f(p_->in, p_->in + g_.N);
    for (double& v : f) v /= g_.N;
    return f;
}

double Spectral1D::wavenumber(int m) const { return 2.0 * kPi * m / g_.L; }

// ---------------------------------------------------------------------------
// Poisson

PoissonResult poisson_solve(const Field& rho, double rho_bar, const Grid1D& g, const Spectral1D* fft) {
    g.validate();
    if (static_cast<int>(rho.size()) != g.N) throw DomainError("poisson_solve: size mismatch");
    const int N = g.N;
    PoissonResult r;
    Field src(N);
    double scale = std::abs(rho_bar);
    for (int i = 0; i < N; ++i) {
        src[i] = 4.0 * kPi * (rho_bar - rho[i]);
        scale = std::max(scale, std::abs(rho[i]));
    }
    if (!g.periodic) {
        // phi = 2 pi sum |x - y| s(y) dy, with the midpoint rule its second difference is exactly 4 pi s
        const double dx = g.dx();
        double A_after = 0.0, B_after = 0.0;
        for (int j = 0; j < N; ++j) {
            A_after += src[j];
            B_after += g.x(j) * src[j];
        }
        double A_before = 0.0, B_before = 0.0;
        r.phi.resize(N);
        r.E.resize(N);
        for (int i = 0; i < N; ++i) {
            const double xi = g.x(i);
            A_after -= src[i];
            B_after -= xi * src[i];
            r.phi[i] = 0.5 * dx * (xi * A_before - B_before - xi * A_after + B_after);
            r.E[i] = 0.5 * dx * (A_before - A_after);
            A_before += src[i];
            B_before += xi * src[i];
        }
        for (int i = 1; i + 1 < N; ++i) {
            const double lap = (r.phi[i + 1] - 2.0 * r.phi[i] + r.phi[i - 1]) / (dx * dx);
            r.residual = std::max(r.residual, std::abs(lap - src[i]));
        }
        return r;
    }
    std::unique_ptr<Spectral1D> own;
    if (!fft) {
        own = std::make_unique<Spectral1D>(g);
        fft = own.get();
    }
    auto F = fft->forward(src);
    if (std::abs(F[0].real()) / N > 1e-10 * 4.0 * kPi * std::max(scale, 1e-300))
        throw DomainError("poisson_solve: periodic data are not neutral");
    std::vector<std::complex<double>> P(F.size()), Ehat(F.size()), L(F.size());
    for (std::size_t m = 1; m < F.size(); ++m) {
        const double k = fft->wavenumber(static_cast<int>(m));
        P[m] = -F[m] / (k * k);
        Ehat[m] = (static_cast<int>(m) == N / 2) ? 0.0 : std::complex<double>(0.0, k) * P[m];
        L[m] = -k * k * P[m];
    }
    r.phi = fft->backward(P);
    r.E = fft->backward(Ehat);
    const Field lap = fft->backward(L);
    for (int i = 0; i < N; ++i) r.residual = std::max(r.residual, std::abs(lap[i] - src[i]));
    return r;
}

// ---------------------------------------------------------------------------
// shared finite-volume pieces

namespace {

double mc_slope(double a, double b, double c) {
    const double dl = b - a, dr = c - b;
    if (dl * dr <= 0.0) return 0.0;
    return std::copysign(std::min({0.5 * std::abs(dl + dr), 2.0 * std::abs(dl), 2.0 * std::abs(dr)}), dl);
}

// left/right values at face i+1/2 for every i (periodic)
void reconstruct(const Field& w, Field& left, Field& right) {
    const int N = static_cast<int>(w.size());
    Field s(N);
    for (int i = 0; i < N; ++i) s[i] = mc_slope(w[(i + N - 1) % N], w[i], w[(i + 1) % N]);
    left.resize(N);
    right.resize(N);
    for (int i = 0; i < N; ++i) {
        const int ip = (i + 1) % N;
        left[i] = w[i] + 0.5 * s[i];
        right[i] = w[ip] - 0.5 * s[ip];
    }
}

void check_floor(const Field& rho, double ref, double floor, const char* who) {
    for (double r : rho)
        if (!(r > floor * ref)) throw SolverError(std::string(who) + ": density below the positivity floor");
}

template <class Rhs, class State>
void ssp_rk3(State& U, double dt, Rhs&& L) {
    State k = L(U);
    State U1 = U;
    U1.axpy(dt, k);
    k = L(U1);
    State U2 = U;
    U2.scale(0.75);
    U2.axpy(0.25, U1);
    U2.axpy(0.25 * dt, k);
    k = L(U2);
    U.scale(1.0 / 3.0);
    U.axpy(2.0 / 3.0, U2);
    U.axpy(2.0 / 3.0 * dt, k);
}

// a bundle of fields with the vector-space operations SSP-RK3 needs
struct Bundle {
    std::vector<Field> f;
    void axpy(double a, const Bundle& o) {
        for (std::size_t k = 0; k < f.size(); ++k)
            for (std::size_t i = 0; i < f[k].size(); ++i) f[k][i] += a * o.f[k][i];
    }
    void scale(double a) {
        for (auto& v : f)
            for (double& x : v) x *= a;
    }
};

// EP right-hand side on conserved (rho, rho u)
Bundle ep_rhs(const Bundle& U, double rho_bar, const EPSolver& S, const StepControl& ctl, Field* E_out = nullptr) {
    const Grid1D& g = S.grid();
    const int N = g.N;
    const Field& rho = U.f[0];
    check_floor(rho, rho_bar, ctl.floor, "ep_step");
    Field u(N);
    for (int i = 0; i < N; ++i) u[i] = U.f[1][i] / rho[i];
    const Field E = poisson_solve(rho, rho_bar, g, &S.fft()).E;
    Field rl, rr, ul, ur;
    reconstruct(rho, rl, rr);
    reconstruct(u, ul, ur);
    Field F0(N), F1(N);
    const Polytrope& eos = S.eos();
    for (int i = 0; i < N; ++i) {
        const double aL = std::abs(ul[i]) + std::sqrt(eos.dpressure(rl[i]));
        const double aR = std::abs(ur[i]) + std::sqrt(eos.dpressure(rr[i]));
        const double a = std::max(aL, aR);
        const double mL = rl[i] * ul[i], mR = rr[i] * ur[i];
        F0[i] = 0.5 * (mL + mR) - 0.5 * a * (rr[i] - rl[i]);
        F1[i] = 0.5 * (mL * ul[i] + eos.pressure(rl[i]) + mR * ur[i] + eos.pressure(rr[i])) - 0.5 * a * (mR - mL);
    }
    Bundle d{{Field(N), Field(N)}};
    const double dx = g.dx();
    for (int i = 0; i < N; ++i) {
        const int im = (i + N - 1) % N;
        d.f[0][i] = -(F0[i] - F0[im]) / dx;
        d.f[1][i] = -(F1[i] - F1[im]) / dx - rho[i] * E[i];
    }
    if (E_out) *E_out = E;
    return d;
}

// linearised EP right-hand side on (n1, u1) about the background (rho, u)
Bundle linear_rhs(const Bundle& W, const Field& n0, const Field& u0, const EPSolver& S) {
    const Grid1D& g = S.grid();
    const int N = g.N;
    const Field E1 = poisson_solve(W.f[0], 0.0, g, &S.fft()).E;
    Field nl, nr, ul, ur;
    reconstruct(W.f[0], nl, nr);
    reconstruct(W.f[1], ul, ur);
    const Polytrope& eos = S.eos();
    Field F0(N), F1(N);
    for (int i = 0; i < N; ++i) {
        const int ip = (i + 1) % N;
        const double nb = 0.5 * (n0[i] + n0[ip]), ub = 0.5 * (u0[i] + u0[ip]);
        const double p1 = 2.5 * eos.dtemperature(nb);
        const double a = std::abs(ub) + std::sqrt(eos.dpressure(nb));
        const double fl0 = nb * ul[i] + nl[i] * ub, fr0 = nb * ur[i] + nr[i] * ub;
        const double fl1 = ub * ul[i] + p1 * nl[i], fr1 = ub * ur[i] + p1 * nr[i];
        F0[i] = 0.5 * (fl0 + fr0) - 0.5 * a * (nr[i] - nl[i]);
        F1[i] = 0.5 * (fl1 + fr1) - 0.5 * a * (ur[i] - ul[i]);
    }
    Bundle d{{Field(N), Field(N)}};
    const double dx = g.dx();
    for (int i = 0; i < N; ++i) {
        const int im = (i + N - 1) % N;
        d.f[0][i] = -(F0[i] - F0[im]) / dx;
        d.f[1][i] = -(F1[i] - F1[im]) / dx - E1[i];
    }
    return d;
}

Bundle ep_conserved(const EPState& s) {
    Bundle U{{s.rho, Field(s.rho.size())}};
    for (std::size_t i = 0; i < s.rho.size(); ++i) U.f[1][i] = s.rho[i] * s.u[i];
    return U;
}

void ep_unpack(const Bundle& U, EPState& s, const EPSolver& S) {
    s.rho = U.f[0];
    s.u.resize(s.rho.size());
    for (std::size_t i = 0; i < s.rho.size(); ++i) s.u[i] = U.f[1][i] / s.rho[i];
    const PoissonResult p = poisson_solve(s.rho, s.rho_bar, S.grid(), &S.fft());
    s.phi = p.phi;
    s.E = p.E;
}

void check_dt(double dt, double limit, const char* who) {
    if (!(dt > 0.0)) throw DomainError(std::string(who) + ": dt must be positive");
    if (dt > limit * (1.0 + 1e-12)) throw SolverError(std::string(who) + ": CFL violated, step rejected");
}

}  // namespace

// ---------------------------------------------------------------------------
// EP

EPState make_ep_state(const Grid1D& g, double rho_bar, const std::function<double(double)>& rho0,
                      const std::function<double(double)>& u0) {
    g.validate();
    EPState s;
    s.rho_bar = rho_bar;
    s.rho.resize(g.N);
    s.u.resize(g.N);
    for (int i = 0; i < g.N; ++i) {
        s.rho[i] = rho0(g.x(i));
        s.u[i] = u0(g.x(i));
    }
    const PoissonResult p = poisson_solve(s.rho, rho_bar, g);
    s.phi = p.phi;
    s.E = p.E;
    return s;
}

double ep_max_dt(const EPState& s, const Polytrope& eos, const Grid1D& g, const StepControl& ctl) {
    double a = 0.0;
    for (std::size_t i = 0; i < s.rho.size(); ++i) a = std::max(a, std::abs(s.u[i]) + std::sqrt(eos.dpressure(s.rho[i])));
    return a > 0.0 ? ctl.cfl * g.dx() / a : std::numeric_limits<double>::infinity();
}

EPSolver::EPSolver(const Grid1D& g, const Polytrope& eos, StepControl ctl) : g_(g), eos_(eos), ctl_(ctl), fft_(g) {
    if (!g.periodic) throw DomainError("EPSolver: periodic grids only");
}

void EPSolver::step(EPState& s, double dt) const {
    check_dt(dt, max_dt(s), "ep_step");
    Bundle U = ep_conserved(s);
    ssp_rk3(U, dt, [&](const Bundle& V) { return ep_rhs(V, s.rho_bar, *this, ctl_); });
    check_floor(U.f[0], s.rho_bar, ctl_.floor, "ep_step");
    ep_unpack(U, s, *this);
    s.t += dt;
}

void ep_step(EPState& s, double dt, const Polytrope& eos, const Grid1D& g) { EPSolver(g, eos).step(s, dt); }

Perturbation make_perturbation(const Grid1D& g, const std::function<double(double)>& n1,
                               const std::function<double(double)>& u1) {
    Perturbation p;
    p.n1.resize(g.N);
    p.u1.resize(g.N);
    for (int i = 0; i < g.N; ++i) {
        p.n1[i] = n1(g.x(i));
        p.u1[i] = u1(g.x(i));
    }
    p.E1 = poisson_solve(p.n1, 0.0, g).E;
    return p;
}

void linearized_ep_step(const std::function<EPState(double)>& background, double t, Perturbation& p, double dt,
                        const EPSolver& solver) {
    // SSP-RK3 stage times are t, t + dt, t + dt/2
    const EPState b0 = background(t), b1 = background(t + dt), b2 = background(t + 0.5 * dt);
    check_dt(dt, solver.max_dt(b0), "linearized_ep_step");
    const EPState* stage[3] = {&b0, &b1, &b2};
    int k = 0;
    Bundle W{{p.n1, p.u1}};
    ssp_rk3(W, dt, [&](const Bundle& V) {
        const EPState& b = *stage[k++];
        return linear_rhs(V, b.rho, b.u, solver);
    });
    p.n1 = W.f[0];
    p.u1 = W.f[1];
    p.E1 = poisson_solve(p.n1, 0.0, solver.grid(), &solver.fft()).E;
}

void coupled_ep_step(EPState& bg, Perturbation& p, double dt, const EPSolver& solver) {
    check_dt(dt, solver.max_dt(bg), "coupled_ep_step");
    const int N = solver.grid().N;
    Bundle U = ep_conserved(bg);
    U.f.push_back(p.n1);
    U.f.push_back(p.u1);
    StepControl ctl;
    ssp_rk3(U, dt, [&](const Bundle& V) {
        Bundle bgV{{V.f[0], V.f[1]}};
        Bundle d = ep_rhs(bgV, bg.rho_bar, solver, ctl);
        Field u0(N);
        for (int i = 0; i < N; ++i) u0[i] = V.f[1][i] / V.f[0][i];
        Bundle l = linear_rhs(Bundle{{V.f[2], V.f[3]}}, V.f[0], u0, solver);
        d.f.push_back(std::move(l.f[0]));
        d.f.push_back(std::move(l.f[1]));
        return d;
    });
    p.n1 = U.f[2];
    p.u1 = U.f[3];
    p.E1 = poisson_solve(p.n1, 0.0, solver.grid(), &solver.fft()).E;
    U.f.resize(2);
    ep_unpack(U, bg, solver);
    bg.t += dt;
}

// ---------------------------------------------------------------------------
// isentrope table

struct IsentropeTable::Splines {
    gsl_interp_accel* acc[4] = {};
    gsl_spline* s[4] = {};  // log n, h/c^2 - 1, cs^2, and log T(log n)
    ~Splines() {
        for (int k = 0; k < 4; ++k) {
            if (s[k]) gsl_spline_free(s[k]);
            if (acc[k]) gsl_interp_accel_free(acc[k]);
        }
    }
};

IsentropeTable::IsentropeTable(double S, double c, double T_lo, double T_hi, int nodes)
    : S_(S), c_(c), lo_(std::log(T_lo)), hi_(std::log(T_hi)), sp_(std::make_unique<Splines>()) {
    if (!(T_lo > 0.0 && T_hi > T_lo) || nodes < 8) throw DomainError("IsentropeTable: bad range");
    std::vector<double> x(nodes), ln(nodes), rho(nodes), cs2(nodes);
    for (int k = 0; k < nodes; ++k) {
        x[k] = lo_ + (hi_ - lo_) * k / (nodes - 1);
        const double T = std::exp(x[k]);
        const double g = thermo::gamma_of(T, c);
        const auto R = sf::bessel_ratio(g);
        ln[k] = thermo::log_isentropic_density(T, thermo::EntropyConstant{S}, c);
        rho[k] = R.rho;
        // c^2 n h'/h with n h' = T (q - 1/gamma^2)/q
        cs2[k] = T * (R.q - 1.0 / (g * g)) / (R.q * R.r);
    }
    const double* ys[3] = {ln.data(), rho.data(), cs2.data()};
    for (int k = 0; k < 3; ++k) {
        sp_->acc[k] = gsl_interp_accel_alloc();
        sp_->s[k] = gsl_spline_alloc(gsl_interp_cspline, nodes);
        gsl_spline_init(sp_->s[k], x.data(), ys[k], nodes);
    }
    for (int k = 1; k < nodes; ++k)
        if (!(ln[k] > ln[k - 1])) throw NumericError("IsentropeTable: density not increasing in T");
    sp_->acc[3] = gsl_interp_accel_alloc();
    sp_->s[3] = gsl_spline_alloc(gsl_interp_cspline, nodes);
    gsl_spline_init(sp_->s[3], ln.data(), x.data(), nodes);
}

IsentropeTable::~IsentropeTable() = default;

namespace {
void in_range(double v, double lo, double hi, const char* who) {
    if (!(v >= lo && v <= hi)) throw DomainError(std::string(who) + ": outside the tabulated isentrope");
}
}  // namespace

double IsentropeTable::log_density(double x) const {
    in_range(x, lo_, hi_, "IsentropeTable");
    return gsl_spline_eval(sp_->s[0], x, sp_->acc[0]);
}
double IsentropeTable::dlog_density(double x) const {
    in_range(x, lo_, hi_, "IsentropeTable");
    return gsl_spline_eval_deriv(sp_->s[0], x, sp_->acc[0]);
}
double IsentropeTable::enthalpy_over_c2(double x) const {
    in_range(x, lo_, hi_, "IsentropeTable");
    return 1.0 + gsl_spline_eval(sp_->s[1], x, sp_->acc[1]);
}
double IsentropeTable::sound_speed2(double x) const {
    in_range(x, lo_, hi_, "IsentropeTable");
    return gsl_spline_eval(sp_->s[2], x, sp_->acc[2]);
}
double IsentropeTable::log_temperature(double log_n) const {
    in_range(log_n, sp_->s[3]->x[0], sp_->s[3]->x[sp_->s[3]->size - 1], "IsentropeTable");
    return gsl_spline_eval(sp_->s[3], log_n, sp_->acc[3]);
}

// ---------------------------------------------------------------------------
// rEM

REMSolver::REMSolver(const Grid1D& g, double c, double S, double T_lo, double T_hi, StepControl ctl)
    : g_(g), c_(c), ctl_(ctl), tab_(S, c, T_lo, T_hi), fft_(g) {
    if (!g.periodic) throw DomainError("REMSolver: periodic grids only");
}

REMState REMSolver::make_state(const Field& n, const Field& u) const {
    REMState s;
    s.c = c_;
    s.n = n;
    s.u = u;
    s.T.resize(n.size());
    Field D(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (std::abs(u[i]) >= 0.5 * c_) throw SolverError("rem: |u| >= c/2");
        s.T[i] = std::exp(tab_.log_temperature(std::log(n[i])));
        D[i] = n[i] * std::sqrt(1.0 + (u[i] / c_) * (u[i] / c_));
    }
    double mean = 0.0;
    for (double d : D) mean += d;
    s.n_bar = mean / D.size();
    s.E = poisson_solve(D, s.n_bar, g_, &fft_).E;
    return s;
}

REMSolver::Conserved REMSolver::to_conserved(const REMState& s) const {
    Conserved U{Field(s.n.size()), Field(s.n.size())};
    for (std::size_t i = 0; i < s.n.size(); ++i) {
        const double g0 = std::sqrt(1.0 + (s.u[i] / c_) * (s.u[i] / c_));
        U.D[i] = s.n[i] * g0;
        U.m[i] = U.D[i] * tab_.enthalpy_over_c2(std::log(s.T[i])) * s.u[i];
    }
    return U;
}

void REMSolver::recover(const Conserved& U, REMState& s) const {
    const std::size_t N = U.D.size();
    s.n.resize(N);
    s.u.resize(N);
    s.T.resize(N);
    check_floor(U.D, s.n_bar, ctl_.floor, "rem_step_1d");
    for (std::size_t i = 0; i < N; ++i) {
        // solve log n(x) + log(u0/c) = log D for x = log T, with u = (m/D)/(h/c^2)
        const double r = U.m[i] / U.D[i], logD = std::log(U.D[i]);
        double x = std::log(s.T[i] > 0.0 ? s.T[i] : 1.0);
        bool done = false;
        for (int it = 0; it < 60 && !done; ++it) {
            const double hc = tab_.enthalpy_over_c2(x);
            const double u = r / hc, w = (u / c_) * (u / c_);
            const double G = tab_.log_density(x) + 0.5 * std::log1p(w) - logD;
            // w ~ hc^-2 contributes -w/(1+w) dlog(hc)/dx; hc - 1 = O(T/c^2) so a crude slope suffices
            const double dlog_hc = (hc - 1.0) / hc;
            const double dG = tab_.dlog_density(x) - w / (1.0 + w) * dlog_hc;
            const double step = G / dG;
            x -= step;
            done = std::abs(step) < 1e-15;
        }
        const double T = std::exp(x);
        const double u = r / tab_.enthalpy_over_c2(x);
        if (std::abs(u) >= 0.5 * c_) throw SolverError("rem_step_1d: |u| >= c/2");
        s.T[i] = T;
        s.u[i] = u;
        s.n[i] = std::exp(tab_.log_density(x));
    }
}

void REMSolver::rhs(const REMState& s, Conserved& dU) const {
    const int N = g_.N;
    Field D(N);
    for (int i = 0; i < N; ++i) D[i] = s.n[i] * std::sqrt(1.0 + (s.u[i] / c_) * (s.u[i] / c_));
    const Field E = poisson_solve(D, s.n_bar, g_, &fft_).E;
    Field nl, nr, ul, ur;
    reconstruct(s.n, nl, nr);
    reconstruct(s.u, ul, ur);
    Field F0(N), F1(N);
    auto face = [&](double n, double u, double& Dc, double& mc, double& f0, double& f1, double& speed) {
        const double x = tab_.log_temperature(std::log(n));
        const double T = std::exp(x), hc = tab_.enthalpy_over_c2(x);
        const double g0 = std::sqrt(1.0 + (u / c_) * (u / c_));
        Dc = n * g0;
        mc = Dc * hc * u;
        f0 = n * u;
        f1 = n * hc * u * u + n * T;
        speed = std::abs(u) / g0 + std::sqrt(tab_.sound_speed2(x));
    };
    for (int i = 0; i < N; ++i) {
        double DL, mL, f0L, f1L, aL, DR, mR, f0R, f1R, aR;
        face(nl[i], ul[i], DL, mL, f0L, f1L, aL);
        face(nr[i], ur[i], DR, mR, f0R, f1R, aR);
        const double a = std::max(aL, aR);
        F0[i] = 0.5 * (f0L + f0R) - 0.5 * a * (DR - DL);
        F1[i] = 0.5 * (f1L + f1R) - 0.5 * a * (mR - mL);
    }
    dU.D.assign(N, 0.0);
    dU.m.assign(N, 0.0);
    const double dx = g_.dx();
    for (int i = 0; i < N; ++i) {
        const int im = (i + N - 1) % N;
        dU.D[i] = -(F0[i] - F0[im]) / dx;
        dU.m[i] = -(F1[i] - F1[im]) / dx - D[i] * E[i];
    }
}

double REMSolver::max_dt(const REMState& s) const {
    double a = 0.0;
    for (std::size_t i = 0; i < s.n.size(); ++i) {
        const double g0 = std::sqrt(1.0 + (s.u[i] / c_) * (s.u[i] / c_));
        a = std::max(a, std::abs(s.u[i]) / g0 + std::sqrt(tab_.sound_speed2(std::log(s.T[i]))));
    }
    return ctl_.cfl * g_.dx() / a;
}

void REMSolver::step(REMState& s, double dt) const {
    check_dt(dt, max_dt(s), "rem_step_1d");
    Conserved U = to_conserved(s);
    REMState work = s;
    auto L = [&](const Bundle& V) {
        recover(Conserved{V.f[0], V.f[1]}, work);
        Conserved d;
        rhs(work, d);
        return Bundle{{std::move(d.D), std::move(d.m)}};
    };
    Bundle B{{std::move(U.D), std::move(U.m)}};
    ssp_rk3(B, dt, L);
    recover(Conserved{B.f[0], B.f[1]}, s);
    s.E = poisson_solve(B.f[0], s.n_bar, g_, &fft_).E;
    s.t += dt;
}

double REMSolver::gauss_residual(const REMState& s) const {
    // compared mode by mode; the Nyquist mode of the charge has no real-valued field with that divergence,
    // so it is excluded from both sides (it is also zeroed in E by poisson_solve)
    const int N = g_.N;
    Field q(N);
    for (int i = 0; i < N; ++i) q[i] = 4.0 * kPi * (s.n_bar - s.n[i] * std::sqrt(1.0 + (s.u[i] / c_) * (s.u[i] / c_)));
    auto F = fft_.forward(s.E);
    auto Q = fft_.forward(q);
    std::vector<std::complex<double>> R(F.size());
    for (int m = 0; m < N / 2; ++m) R[m] = std::complex<double>(0.0, fft_.wavenumber(m)) * F[m] - Q[m];
    const Field r = fft_.backward(R);
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
}

void rem_step_1d(REMState& s, double dt, const REMSolver& solver) { solver.step(s, dt); }

// ---------------------------------------------------------------------------
// experiments

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double a = std::log(x[k]), b = std::log(y[k]);
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {
double sup_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}
}  // namespace

NewtonianRow newtonian_run(double c, const NewtonianConfig& cfg) {
    const Grid1D& g = cfg.grid;
    const double S = entropy_for(cfg.rho_bar, cfg.T_bar);
    const Polytrope eos = Polytrope::from_entropy(S);
    const double k = 2.0 * kPi / g.L;
    EPSolver ep(g, eos);
    EPState bg = make_ep_state(
        g, cfg.rho_bar, [&](double x) { return cfg.rho_bar * (1.0 + cfg.amp_n * std::cos(k * x)); },
        [&](double x) { return cfg.amp_u * std::sin(k * x); });
    const double a1 = cfg.first_order;
    Perturbation p = make_perturbation(
        g, [&](double x) { return 0.5 * a1 * cfg.rho_bar * std::sin(2 * k * x); },
        [&](double x) { return 0.5 * a1 * std::cos(2 * k * x); });

    REMSolver rem(g, c, S, cfg.T_bar / 10.0, cfg.T_bar * 10.0);
    Field n0(g.N), u0(g.N);
    for (int i = 0; i < g.N; ++i) {
        n0[i] = bg.rho[i] + p.n1[i] / c;
        u0[i] = bg.u[i] + p.u1[i] / c;
    }
    REMState s = rem.make_state(n0, u0);

    // both solvers accept up to the default CFL; each step runs at cfg.cfl of the tighter one
    const double shrink = cfg.cfl / StepControl{}.cfl;

    NewtonianRow row;
    row.c = c;
    auto measure = [&]() {
        const double e = std::max({sup_diff(s.n, bg.rho), sup_diff(s.u, bg.u), sup_diff(s.E, bg.E)});
        Field nf(g.N), uf(g.N), Ef(g.N);
        for (int i = 0; i < g.N; ++i) {
            nf[i] = bg.rho[i] + p.n1[i] / c;
            uf[i] = bg.u[i] + p.u1[i] / c;
            Ef[i] = bg.E[i] + p.E1[i] / c;
        }
        const double e1 = std::max({sup_diff(s.n, nf), sup_diff(s.u, uf), sup_diff(s.E, Ef)});
        row.error = std::max(row.error, e);
        row.error_first = std::max(row.error_first, e1);
        row.gauss_residual = std::max(row.gauss_residual, rem.gauss_residual(s));
    };
    measure();
    double t = 0.0;
    while (t < cfg.t_end) {
        double dt = shrink * std::min(ep.max_dt(bg), rem.max_dt(s));
        if (t + dt > cfg.t_end * (1.0 - 1e-12)) dt = cfg.t_end - t;
        coupled_ep_step(bg, p, dt, ep);
        rem.step(s, dt);
        t += dt;
        ++row.steps;
        measure();
    }
    return row;
}

Dispersion plasma_dispersion(int mode, const Grid1D& g, double rho_bar, double S, double amplitude, bool linear,
                             double t_end) {
    const Polytrope eos = Polytrope::from_entropy(S);
    const double k = 2.0 * kPi * mode / g.L;
    Dispersion d;
    d.k = k;
    d.omega_theory = std::sqrt(4.0 * kPi * rho_bar + eos.dpressure(rho_bar) * k * k);
    if (t_end <= 0.0) t_end = 3.0 * 2.0 * kPi / d.omega_theory;
    EPSolver ep(g, eos);
    EPState bg = make_ep_state(g, rho_bar, [&](double) { return rho_bar; }, [](double) { return 0.0; });
    EPState s = make_ep_state(
        g, rho_bar, [&](double x) { return rho_bar * (1.0 + amplitude * std::cos(k * x)); },
        [](double) { return 0.0; });
    Perturbation p = make_perturbation(g, [&](double x) { return rho_bar * amplitude * std::cos(k * x); },
                                       [](double) { return 0.0; });
    const double dt = 0.5 * ep.max_dt(s);
    auto amplitude_now = [&]() {
        const Field& f = linear ? p.n1 : s.rho;
        return ep.fft().forward(f)[mode].real();
    };
    std::vector<double> crossings;
    double t = 0.0, prev = amplitude_now();
    while (t < t_end) {
        if (linear)
            linearized_ep_step([&](double) { return bg; }, t, p, dt, ep);
        else
            ep.step(s, dt);
        t += dt;
        const double cur = amplitude_now();
        if ((prev > 0.0) != (cur > 0.0)) crossings.push_back(t - dt * cur / (cur - prev));
        prev = cur;
    }
    if (crossings.size() < 2) throw SolverError("plasma_dispersion: too few zero crossings");
    // crossings sit at (j + 1/2) pi / omega
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(crossings.size());
    for (std::size_t j = 0; j < crossings.size(); ++j) {
        sx += j;
        sy += crossings[j];
        sxx += double(j) * j;
        sxy += j * crossings[j];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    d.omega_measured = kPi / slope;
    return d;
}

}  // namespace rvmb::fluid
