#include "doctest.h"
#include "oracles/bessel_oracle.hpp"
#include "oracles/fit.hpp"
#include "rvmb/thermo.hpp"

#include <random>

using namespace rvmb;
using namespace rvmb::thermo;

namespace {

// n(T) straight from the defining display with boost Bessel functions
double density_oracle(double T, double S, double c) {
    const double g = c * c / T;
    const double k1 = oracle::bessel_k_boost(1, g), k2 = oracle::bessel_k_boost(2, g);
    return 4 * M_PI * std::exp(4.0) * c * c * c * std::exp(-S) * k2 / g * std::exp(g * k1 / k2);
}

}  // namespace

TEST_SUITE("thermo") {

TEST_CASE("pressure and the two energy forms") {
    FluidState s{2.0, Vec3::Zero(), 0.5};
    CHECK(pressure(s, 10.0) == doctest::Approx(1.0));
    FluidState t{1.0, Vec3::Zero(), 1.0};
    const double e1 = energy_density(t, 10.0), e2 = energy_density_k1(t, 10.0);
    CHECK(std::abs(e1 - e2) <= 1e-12 * std::abs(e1));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uT(0.5, 2.0), un(0.2, 3.0), uc(1.0, 100.0);
    for (int i = 0; i < 50; ++i) {
        FluidState r{un(rng), Vec3::Zero(), uT(rng)};
        const double c = uc(rng);
        const double a = energy_density(r, c), b = energy_density_k1(r, c);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        CHECK(a > 0);
        CHECK(enthalpy(r, c) * r.n == doctest::Approx(a + pressure(r, c)).epsilon(1e-14));
    }
}

TEST_CASE("h/c^2 - 1 - 5T/(2c^2) is O(c^-4)") {
    std::vector<double> cs{10, 20, 40, 80}, res;
    FluidState s{1.0, Vec3::Zero(), 1.0};
    for (double c : cs) res.push_back(enthalpy(s, c) / (c * c) - 1.0 - 2.5 * s.T / (c * c));
    CHECK(oracle::loglog_slope(cs, res) == doctest::Approx(-4.0).epsilon(0.05));
}

TEST_CASE("isentropic density matches the boost-based oracle") {
    for (double c : {5.0, 10.0, 20.0})
        for (double T : {0.5, 1.0, 2.0}) {
            if (c * c / T > 700) continue;  // boost K2 underflows
            const double a = isentropic_density(T, {0.3}, c), b = density_oracle(T, 0.3, c);
            INFO("c=" << c << " T=" << T);
            CHECK(std::abs(a - b) <= 1e-11 * b);
        }
}

TEST_CASE("temperature round trip") {
    const double n = isentropic_density(1.0, {0.0}, 20.0);
    CHECK(std::abs(solve_temperature(n, {0.0}, 20.0) - 1.0) <= 1e-8);
    for (double c : {10.0, 50.0, 80.0})
        for (double T : {0.5, 1.0, 2.0}) {
            const double nn = isentropic_density(T, {0.7}, c);
            const double back = solve_temperature(nn, {0.7}, c);
            CHECK(std::abs(isentropic_density(back, {0.7}, c) - nn) <= 1e-10 * nn);
            CHECK(std::abs(back - T) <= 1e-8 * T);
        }
    CHECK_THROWS_AS(solve_temperature(1.0, {0.0}, 20.0, 1.0, 1.1), RootNotBracketed);
}

TEST_CASE("Newtonian expansion of n(T) has O(c^-4) remainder") {
    const double T = 1.0, S = 0.0;
    std::vector<double> cs{10, 20, 40, 80}, res;
    for (double c : cs) {
        const double lead = std::exp(2.5 - S) * std::pow(2 * M_PI, 1.5) * (std::pow(T, 1.5) + 3.75 * std::pow(T, 2.5) / (c * c));
        res.push_back(isentropic_density(T, {S}, c) - lead);
    }
    CHECK(oracle::loglog_slope(cs, res) == doctest::Approx(-4.0).epsilon(0.05));
}

TEST_CASE("Newtonian temperatures") {
    // e^{2S/3 - 5/3} = 2 pi
    const double S = 1.5 * (std::log(2 * M_PI) + 5.0 / 3.0);
    CHECK(newtonian_temperature(1.0, 0.0, {S}, 0) == doctest::Approx(1.0));
    CHECK(newtonian_temperature(1.0, 0.0, {S}, 1) == 0.0);
    // T1 is the derivative of T0 times n1
    const double n0 = 1.7, h = 1e-6;
    const double d = (newtonian_temperature(n0 + h, 0, {0.2}, 0) - newtonian_temperature(n0 - h, 0, {0.2}, 0)) / (2 * h);
    CHECK(newtonian_temperature(n0, 0.3, {0.2}, 1) == doctest::Approx(0.3 * d).epsilon(1e-8));
    std::vector<double> cs{10, 20, 40, 80}, err;
    for (double c : cs) err.push_back(solve_temperature(1.0, {0.0}, c) - newtonian_temperature(1.0, 0, {0.0}, 0));
    CHECK(oracle::loglog_slope(cs, err) == doctest::Approx(-2.0).epsilon(0.1));
}

TEST_CASE("P'(n) = n h'(n) on the isentrope") {
    const double c = 20.0, S = 0.0, n = 1.0;
    const double hstep = 1e-4;
    auto P = [&](double nn) { return nn * solve_temperature(nn, {S}, c); };
    const double fd = (P(n * (1 + hstep)) - P(n * (1 - hstep))) / (2 * n * hstep);
    const double T = solve_temperature(n, {S}, c);
    CHECK(std::abs(fd - n * enthalpy_derivative(n, T, c)) <= 1e-5);
    CHECK(pressure_derivative(n, T, c) == doctest::Approx(n * enthalpy_derivative(n, T, c)).epsilon(1e-12));
    // h' by FD of h(n) along the isentrope
    auto h = [&](double nn) { return enthalpy({nn, Vec3::Zero(), solve_temperature(nn, {S}, c)}, c); };
    const double fdh = (h(n * (1 + hstep)) - h(n * (1 - hstep))) / (2 * n * hstep);
    CHECK(fdh == doctest::Approx(enthalpy_derivative(n, T, c)).epsilon(1e-6));
}

TEST_CASE("sound speed gap") {
    const double T = solve_temperature(1.0, {0.0}, 20.0);
    const double gap = sound_speed_gap({1.0, Vec3::Zero(), T}, 20.0);
    CHECK(gap > 0);
    // n h' -> 5T/3 and h - n h' -> c^2 + O(T)
    std::vector<double> cs{10, 20, 40, 80}, r1;
    for (double c : cs) {
        const double nh = enthalpy_derivative(1.0, 1.0, c);
        r1.push_back(nh - 5.0 / 3.0);
        const double g = sound_speed_gap({1.0, Vec3::Zero(), 1.0}, c);
        CHECK(std::abs(g - c * c) < 5.0);
    }
    CHECK(oracle::loglog_slope(cs, r1) == doctest::Approx(-2.0).epsilon(0.1));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uT(0.5, 2.0), un(0.1, 5.0);
    for (int i = 0; i < 100; ++i) {
        FluidState s{un(rng), Vec3::Zero(), uT(rng)};
        const double hp = enthalpy_derivative(s.n, s.T, 50.0);
        CHECK(hp > 0);
        CHECK(sound_speed_gap(s, 50.0) > 0);
    }
}

TEST_CASE("Juttner basics") {
    FluidState s{1.3, Vec3::Zero(), 0.8};
    const double c = 10.0;
    const Vec3 p(0.3, -0.2, 0.5);
    const double g = c * c / s.T;
    const double direct = s.n * g / (4 * M_PI * c * c * c * oracle::bessel_k_boost(2, g)) *
                          std::exp(-c * std::sqrt(c * c + p.squaredNorm()) / s.T);
    CHECK(juttner(s, p, c) == doctest::Approx(direct).epsilon(1e-12));
    GlobalMaxwellianParams gm{1.0, 0.8, 0.75, 10.0};
    CHECK(global_maxwellian(gm, Vec3::Zero(), c) ==
          doctest::Approx(gm.n_M * g * std::exp(-g) / (4 * M_PI * c * c * c * oracle::bessel_k_boost(2, g))).epsilon(1e-12));
    const Vec3 q(2.0, 1.0, 0.0);
    const double q0 = std::sqrt(c * c + q.squaredNorm());
    CHECK(global_maxwellian(gm, q, c) / global_maxwellian(gm, Vec3::Zero(), c) ==
          doctest::Approx(std::exp(-c * (q0 - c) / gm.T_M)).epsilon(1e-12));
    CHECK_THROWS_AS(juttner(s, Vec3(NAN, 0, 0), c), DomainError);
}

}
