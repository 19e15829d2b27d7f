#pragma once

#include "rvmb/common.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace rvmb::fluid {

using Field = std::vector<double>;

struct Grid1D {
    int N = 512;
    double L = 2.0 * kPi;
    bool periodic = true;

    double dx() const { return L / N; }
    double x(int i) const { return (i + 0.5) * dx(); }
    void validate() const;
};

// Classical polytrope P = K rho^{5/3}, theta = T0(rho) = K rho^{2/3}, K = e^{2S/3 - 5/3}/(2 pi)
struct Polytrope {
    double K = 1.0;
    static Polytrope from_entropy(double S);
    double pressure(double rho) const { return K * std::pow(rho, 5.0 / 3.0); }
    double dpressure(double rho) const { return 5.0 / 3.0 * K * std::pow(rho, 2.0 / 3.0); }
    double temperature(double n) const { return K * std::pow(n, 2.0 / 3.0); }
    double dtemperature(double n) const { return 2.0 / 3.0 * K * std::pow(n, -1.0 / 3.0); }
};

// S such that the Newtonian temperature at density n equals T
double entropy_for(double n, double T);

/// Periodic 1D FFT helper; plans are owned per instance.
class Spectral1D {
public:
    explicit Spectral1D(const Grid1D& g);
    ~Spectral1D();
    Spectral1D(const Spectral1D&) = delete;
    Spectral1D& operator=(const Spectral1D&) = delete;

    std::vector<std::complex<double>> forward(const Field& f) const;
    Field backward(const std::vector<std::complex<double>>& F) const;
    double wavenumber(int m) const;  // physical k of mode m
    const Grid1D& grid() const { return g_; }

private:
    Grid1D g_;
    struct Plans;
    std::unique_ptr<Plans> p_;
};

struct PoissonResult {
    Field phi, E;       // E = d phi/dx
    double residual = 0.0;  // max |phi'' - 4 pi (rho_bar - rho)|
};

// Laplacian(phi) = 4 pi (rho_bar - rho). Periodic grids use the spectral mean-zero gauge and
// require neutrality; non-periodic grids use the whole-line Green's function |x|/2.
PoissonResult poisson_solve(const Field& rho, double rho_bar, const Grid1D& g, const Spectral1D* fft = nullptr);

struct EPState {
    Field rho, u, phi, E;
    double rho_bar = 1.0;
    double t = 0.0;
};

EPState make_ep_state(const Grid1D& g, double rho_bar, const std::function<double(double)>& rho0,
                      const std::function<double(double)>& u0);

struct StepControl {
    double cfl = 0.4;
    double floor = 1e-8;  // density floor relative to the background
};

// Largest dt allowed by 0.4 dx / max(|u| + sqrt(P'(rho)))
double ep_max_dt(const EPState& s, const Polytrope& eos, const Grid1D& g, const StepControl& ctl = {});

/// One SSP-RK3 step of the finite-volume EP scheme; phi and E re-solved every stage.
class EPSolver {
public:
    EPSolver(const Grid1D& g, const Polytrope& eos, StepControl ctl = {});
    void step(EPState& s, double dt) const;
    double max_dt(const EPState& s) const { return ep_max_dt(s, eos_, g_, ctl_); }
    const Grid1D& grid() const { return g_; }
    const Polytrope& eos() const { return eos_; }
    const Spectral1D& fft() const { return fft_; }

private:
    Grid1D g_;
    Polytrope eos_;
    StepControl ctl_;
    Spectral1D fft_;
};

void ep_step(EPState& s, double dt, const Polytrope& eos, const Grid1D& g);

// First-order correction (n1, u1, E1) of the c-expansion
struct Perturbation {
    Field n1, u1, E1;
};

Perturbation make_perturbation(const Grid1D& g, const std::function<double(double)>& n1,
                               const std::function<double(double)>& u1);

// Linearised EP about a background given as a function of time (sampled at the RK stage times)
void linearized_ep_step(const std::function<EPState(double)>& background, double t, Perturbation& p, double dt,
                        const EPSolver& solver);

// Advances the EP background and its linearisation together
void coupled_ep_step(EPState& bg, Perturbation& p, double dt, const EPSolver& solver);

/// Isentrope of the Bessel closure tabulated in log T: log n, h/c^2 and the sound speed.
class IsentropeTable {
public:
    IsentropeTable(double S, double c, double T_lo, double T_hi, int nodes = 4000);
    ~IsentropeTable();
    IsentropeTable(const IsentropeTable&) = delete;
    IsentropeTable& operator=(const IsentropeTable&) = delete;

    double log_density(double logT) const;
    double enthalpy_over_c2(double logT) const;
    double sound_speed2(double logT) const;  // c^2 n h'/h
    double dlog_density(double logT) const;
    double log_temperature(double log_n) const;
    double c() const { return c_; }
    double S() const { return S_; }

private:
    double S_, c_, lo_, hi_;
    struct Splines;
    std::unique_ptr<Splines> sp_;
};

// 1D electrostatic slab of the relativistic Euler-Maxwell system
struct REMState {
    Field n, u, E, T;
    double n_bar = 1.0;
    double c = 1.0;
    double t = 0.0;
};

class REMSolver {
public:
    REMSolver(const Grid1D& g, double c, double S, double T_lo, double T_hi, StepControl ctl = {});
    REMState make_state(const Field& n, const Field& u) const;
    void step(REMState& s, double dt) const;
    double max_dt(const REMState& s) const;
    // max |dE/dx - 4 pi (n_bar - n u0/c)| by spectral differentiation
    double gauss_residual(const REMState& s) const;
    const IsentropeTable& table() const { return tab_; }

private:
    struct Conserved {
        Field D, m;
    };
    Conserved to_conserved(const REMState& s) const;
    void recover(const Conserved& U, REMState& s) const;
    void rhs(const REMState& s, Conserved& dU) const;
    Grid1D g_;
    double c_;
    StepControl ctl_;
    IsentropeTable tab_;
    Spectral1D fft_;
};

void rem_step_1d(REMState& s, double dt, const REMSolver& solver);

/// The Newtonian-limit experiment: rEM against EP on the same grid and time steps.
struct NewtonianConfig {
    Grid1D grid{512, 2.0 * kPi, true};
    double t_end = 0.5;
    double rho_bar = 1.0;
    double T_bar = 1.0;          // fixes the entropy
    double amp_n = 0.2, amp_u = 0.2;
    double first_order = 1.0;    // amplitude of the c^{-1} part of the rEM initial data
    double cfl = 0.3;
};

struct NewtonianRow {
    double c = 0.0;
    double error = 0.0;         // sup_t |(n,u,E)_rEM - (rho,u,E)_EP|_inf
    double error_first = 0.0;   // same against EP + (n1,u1,E1)/c
    int steps = 0;
    double gauss_residual = 0.0;
};

NewtonianRow newtonian_run(double c, const NewtonianConfig& cfg);

// least-squares slope of log y against log x
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct Dispersion {
    double k = 1.0;
    double omega_measured = 0.0;
    double omega_theory = 0.0;
    double rel_error() const { return std::abs(omega_measured - omega_theory) / omega_theory; }
};

// Small-amplitude plasma oscillation of mode k; linear = true runs the linearised EP about (rho_bar, 0)
Dispersion plasma_dispersion(int k, const Grid1D& g, double rho_bar, double S, double amplitude, bool linear,
                             double t_end = 0.0);

}  // namespace rvmb::fluid
