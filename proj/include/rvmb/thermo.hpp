#pragma once

#include "rvmb/common.hpp"
#include "rvmb/simd.hpp"
#include "rvmb/special_functions.hpp"

namespace rvmb::thermo {

/// Macroscopic state (n, u, T). Light speed is always passed separately.
struct FluidState {
    double n = 1.0;
    Vec3 u = Vec3::Zero();
    double T = 1.0;

    double u0(double c) const { return std::sqrt(c * c + u.squaredNorm()); }
    void validate() const;
};

struct GlobalMaxwellianParams {
    double n_M = 1.0;
    double T_M = 1.0;
    double alpha = 0.75;
    double C_env = 10.0;
};

struct EntropyConstant {
    double S = 0.0;
};

inline double gamma_of(double T, double c) { return c * c / T; }

// n gamma / (4 pi c^3 e^gamma K2(gamma)); M = pref * exp(-(u^mu p_mu shifted)/T)
double juttner_prefactor(const FluidState& s, double c);
simd::JuttnerParams juttner_params(const FluidState& s, double c);

double juttner(const FluidState& s, const Vec3& p, double c);
double global_maxwellian(const GlobalMaxwellianParams& gm, const Vec3& p, double c);

// Truncation radius for every Maxwellian quadrature: 12 sqrt(T) + 12 |u|
inline double momentum_radius(double T_max, double u_norm) { return 12.0 * std::sqrt(T_max) + 12.0 * u_norm; }

// Same radius, widened when gamma is small: the tail then decays like exp(-c p/T), not
// like a Gaussian, so we also require c (p0 - c)/T >= 36 in the rest frame, stretched by the boost.
double momentum_radius(double T_max, double u_norm, double c);

double pressure(const FluidState& s, double c);
double energy_density(const FluidState& s, double c);     // c^2 n K3/K2 - P
double energy_density_k1(const FluidState& s, double c);  // c^2 n K1/K2 + 3P, independent Bessel calls
double enthalpy(const FluidState& s, double c);           // c^2 K3/K2

// Isentropic density law n(T) = 4 pi e^4 c^3 e^{-S} (K2/gamma) exp(gamma K1/K2), as log
double log_isentropic_density(double T, EntropyConstant S, double c);
double isentropic_density(double T, EntropyConstant S, double c);

// Safeguarded Newton in log T with bisection fallback. The default bracket is
// [T0/100, 100 T0] around the Newtonian guess.
double solve_temperature(double n, EntropyConstant S, double c, double T_lo = 0.0, double T_hi = 0.0);

double newtonian_temperature(double n0, double n1, EntropyConstant S, int order);

// dh/dn along the isentrope through (n, T): h' = (T/n) (Q - 1/gamma^2)/Q
double enthalpy_derivative(double n, double T, double c);
// dP/dn along the isentrope
double pressure_derivative(double n, double T, double c);

// h - n h'
double sound_speed_gap(const FluidState& s, double c);

// d ln n / d ln T on the isentrope, -gamma^2 Q
double isentrope_log_slope(double T, double c);

}  // namespace rvmb::thermo
