#include "rvmb/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rvmb::thermo {

namespace sf = special_functions;

void FluidState::validate() const {
    if (!(n > 0.0) || !(T > 0.0) || !std::isfinite(n) || !std::isfinite(T) || !finite(u))
        throw DomainError("FluidState: need n > 0, T > 0 and finite u");
}

double juttner_prefactor(const FluidState& s, double c) {
    const double g = gamma_of(s.T, c);
    return s.n * g / (kFourPi * c * c * c * sf::bessel_k_scaled(2, g).value);
}

simd::JuttnerParams juttner_params(const FluidState& s, double c) {
    s.validate();
    simd::JuttnerParams jp;
    jp.c = c;
    jp.ux = s.u[0];
    jp.uy = s.u[1];
    jp.uz = s.u[2];
    jp.u0 = s.u0(c);
    jp.inv_T = 1.0 / s.T;
    jp.pref = juttner_prefactor(s, c);
    return jp;
}

double juttner(const FluidState& s, const Vec3& p, double c) {
    if (!finite(p)) throw DomainError("juttner: non-finite momentum");
    const simd::JuttnerParams jp = juttner_params(s, c);
    double out;
    simd::scalar::juttner_batch(jp, &p[0], &p[1], &p[2], 1, &out, nullptr);
    return out;
}

double global_maxwellian(const GlobalMaxwellianParams& gm, const Vec3& p, double c) {
    const double g = gamma_of(gm.T_M, c);
    const double pref = gm.n_M * g / (kFourPi * c * c * c * sf::bessel_k_scaled(2, g).value);
    const double p2 = p.squaredNorm();
    // c p0 / T_M - gamma_M = c (p0 - c)/T_M
    return pref * std::exp(-c * p2 / ((energy(p, c) + c) * gm.T_M));
}

double momentum_radius(double T_max, double u_norm, double c) {
    const double e = 36.0 * T_max / c;  // p0 - c at the cut
    const double rest = std::sqrt(e * (2.0 * c + e));
    const double stretch = (std::sqrt(c * c + u_norm * u_norm) + u_norm) / c;
    return std::max(momentum_radius(T_max, u_norm), stretch * rest + u_norm);
}

double pressure(const FluidState& s, double) { return s.n * s.T; }

double enthalpy(const FluidState& s, double c) { return c * c * sf::bessel_ratio(gamma_of(s.T, c)).r; }

double energy_density(const FluidState& s, double c) { return s.n * enthalpy(s, c) - pressure(s, c); }

double energy_density_k1(const FluidState& s, double c) {
    const double g = gamma_of(s.T, c);
    const double k1 = sf::bessel_k_scaled(1, g).value, k2 = sf::bessel_k_scaled(2, g).value;
    return c * c * s.n * k1 / k2 + 3.0 * pressure(s, c);
}

double log_isentropic_density(double T, EntropyConstant S, double c) {
    // 4 pi e^4 c^3 e^{-S} (K2/g) e^{g K1/K2} = 4 pi c^3 e^{-S} (e^g K2 / g) e^{g (K3/K2 - 1)}
    const double g = gamma_of(T, c);
    const double rho = sf::bessel_ratio(g).rho;
    return std::log(kFourPi) + 3.0 * std::log(c) - S.S + std::log(sf::bessel_k_scaled(2, g).value / g) + g * rho;
}

double isentropic_density(double T, EntropyConstant S, double c) { return std::exp(log_isentropic_density(T, S, c)); }

double isentrope_log_slope(double T, double c) {
    const double g = gamma_of(T, c);
    return -g * g * sf::bessel_ratio(g).q;
}

double newtonian_temperature(double n0, double n1, EntropyConstant S, int order) {
    if (!(n0 > 0.0)) throw DomainError("newtonian_temperature: n0 must be positive");
    const double k = std::exp(2.0 / 3.0 * S.S - 5.0 / 3.0);
    if (order == 0) return k * std::pow(n0, 2.0 / 3.0) / (2.0 * kPi);
    if (order == 1) return k * std::pow(n0, -1.0 / 3.0) * n1 / (3.0 * kPi);
    throw DomainError("newtonian_temperature: order must be 0 or 1");
}

double solve_temperature(double n, EntropyConstant S, double c, double T_lo, double T_hi) {
    if (!(n > 0.0)) throw DomainError("solve_temperature: n must be positive");
    const double guess = newtonian_temperature(n, 0.0, S, 0);
    if (T_lo <= 0.0) T_lo = guess / 100.0;
    if (T_hi <= 0.0) T_hi = guess * 100.0;
    const double ln_n = std::log(n);
    auto f = [&](double lt) { return log_isentropic_density(std::exp(lt), S, c) - ln_n; };
    double a = std::log(T_lo), b = std::log(T_hi);
    double fa = f(a), fb = f(b);
    if (fa * fb > 0.0) throw RootNotBracketed("solve_temperature: n(T) - n has no sign change in bracket");
    // n(T) is increasing; keep fa < 0 < fb
    if (fa > 0.0) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double x = std::clamp(std::log(guess), std::min(a, b), std::max(a, b));
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return std::exp(x);
        if (fx < 0.0) {
            a = x;
        } else {
            b = x;
        }
        const double slope = isentrope_log_slope(std::exp(x), c);
        double xn = x - fx / slope;
        const double lo = std::min(a, b), hi = std::max(a, b);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (a + b);
        if (std::abs(xn - x) < 1e-15 * std::max(1.0, std::abs(x))) return std::exp(xn);
        x = xn;
        if (std::abs(a - b) < 1e-15 * std::max(1.0, std::abs(x))) return std::exp(x);
    }
    return std::exp(x);
}

double enthalpy_derivative(double n, double T, double c) {
    const double g = gamma_of(T, c);
    const double q = sf::bessel_ratio(g).q;
    return (T / n) * (q - 1.0 / (g * g)) / q;
}

double pressure_derivative(double, double T, double c) { return T * (1.0 + 1.0 / isentrope_log_slope(T, c)); }

double sound_speed_gap(const FluidState& s, double c) {
    s.validate();
    return enthalpy(s, c) - s.n * enthalpy_derivative(s.n, s.T, c);
}

}  // namespace rvmb::thermo
