#include "doctest.h"
#include "oracles/maxwellian_quad.hpp"
#include "rvmb/moments.hpp"
#include "rvmb/thermo.hpp"

#include <random>

using namespace rvmb;
using namespace rvmb::moments;
using thermo::FluidState;

namespace {

oracle::MomentsOut box(const FluidState& s, double c) {
    const double L = 12.0 * std::sqrt(s.T) * s.u0(c) / c + 2.0;
    return oracle::juttner_moments_box(s.n, {s.u[0], s.u[1], s.u[2]}, s.T, c, L);
}

double ratio_oracle(double T, double c) {
    const double g = c * c / T;
    return oracle::bessel_k_scaled_quad(3, g) / oracle::bessel_k_scaled_quad(2, g);
}

// covariant form A U U U + B (g U + g U + g U)
Tensor3 covariant_third(const FluidState& s, double c) {
    const double r = ratio_oracle(s.T, c);
    const double A = s.n * (c * c + 6.0 * s.T * r) / (c * c * c), B = s.n * s.T * r / c;
    const double U[4] = {s.u0(c), s.u[0], s.u[1], s.u[2]};
    const double gd[4] = {-1, 1, 1, 1};
    Tensor3 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                t(i, j, k) = A * U[i] * U[j] * U[k] +
                             B * ((i == j) * gd[i] * U[k] + (i == k) * gd[i] * U[j] + (j == k) * gd[j] * U[i]);
    return t;
}

FluidState random_state(std::mt19937_64& rng, double c) {
    std::uniform_real_distribution<double> un(0.5, 2.0), uT(0.5, 2.0), uu(-1.0, 1.0);
    Vec3 dir(uu(rng), uu(rng), uu(rng));
    dir /= std::max(dir.norm(), 1e-3);
    std::uniform_real_distribution<double> mag(0.0, 0.25 * c);
    return FluidState{un(rng), mag(rng) * dir, uT(rng)};
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("metric raise and lower") {
    const Vec4 v(1.5, -2.0, 0.25, 3.0);
    CHECK((raise(lower(v)) - v).norm() == 0.0);
    CHECK(lower(v)[0] == -1.5);
    CHECK(metric().determinant() == doctest::Approx(-1.0));
}

TEST_CASE("first and second moments at rest") {
    const double c = 10.0;
    FluidState s{1.3, Vec3::Zero(), 0.8};
    const FirstSecond m = first_second_moments(s, c);
    CHECK(m.I[0] == doctest::Approx(s.n).epsilon(1e-15));
    CHECK(m.I.tail<3>().norm() == 0.0);
    CHECK(m.T2(0, 0) == doctest::Approx(thermo::energy_density(s, c) / c).epsilon(1e-13));
    for (int i = 1; i < 4; ++i) CHECK(m.T2(i, i) == doctest::Approx(s.n * s.T / c).epsilon(1e-14));
    CHECK(m.T2(1, 2) == 0.0);
    CHECK(m.T2(0, 3) == 0.0);
}

TEST_CASE("second moment against the Cartesian oracle") {
    const double c = 10.0;
    FluidState s{1.0, Vec3(0.3, 0.0, 0.0), 1.0};
    const FirstSecond m = first_second_moments(s, c);
    const auto o = box(s, c);
    double scale = m.T2.cwiseAbs().maxCoeff(), gap = 0.0;
    for (int a = 0; a < 4; ++a) {
        CHECK(std::abs(m.I[a] - o.I[a]) <= 1e-6 * m.I.cwiseAbs().maxCoeff());
        for (int b = 0; b < 4; ++b) gap = std::max(gap, std::abs(m.T2(a, b) - o.T2[a][b]));
    }
    CHECK(gap <= 1e-6 * scale);
}

TEST_CASE("trace identity") {
    std::mt19937_64 rng(11);
    for (double c : {3.0, 10.0, 50.0}) {
        for (int k = 0; k < 10; ++k) {
            const FluidState s = random_state(rng, c);
            const FirstSecond m = first_second_moments(s, c);
            const double tr = (metric() * m.T2).trace();
            const double e = thermo::energy_density(s, c), P = thermo::pressure(s, c);
            CHECK(tr == doctest::Approx(-e / c + 3.0 * P / c).epsilon(1e-10));
        }
    }
}

TEST_CASE("boost is a Lorentz matrix carrying the rest velocity to U") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uu(-1.0, 1.0);
    for (double c : {1.0, 10.0, 100.0}) {
        for (int k = 0; k < 50; ++k) {
            Vec3 u(uu(rng), uu(rng), uu(rng));
            u *= 0.5 * c * std::abs(uu(rng)) / u.norm();
            const Mat4 L = lorentz_boost(u, c);
            CHECK((L.transpose() * metric() * L - metric()).cwiseAbs().maxCoeff() <= 1e-12);
            const Vec4 U = L * Vec4(c, 0, 0, 0);
            const Vec4 want(std::sqrt(c * c + u.squaredNorm()), u[0], u[1], u[2]);
            CHECK((U - want).cwiseAbs().maxCoeff() <= 1e-13 * want[0]);
        }
    }
    // removable singularity at u -> 0
    for (double eps : {0.0, 1e-300, 1e-12, 1e-8}) {
        const Mat4 L = lorentz_boost(Vec3(eps, -eps, 0.5 * eps), 10.0);
        CHECK(L.allFinite());
        CHECK((L - Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("rest-frame third moment") {
    const double c = 10.0;
    FluidState s{1.0, Vec3::Zero(), 1.0};
    const Tensor3 t = rest_frame_third_moment(s, c);
    CHECK(t(0, 1, 2) == 0.0);
    CHECK(t(0, 1, 1) == t(0, 2, 2));
    CHECK(t(0, 2, 2) == t(0, 3, 3));
    CHECK(t(1, 1, 0) == t(0, 1, 1));
    CHECK(t(1, 2, 3) == 0.0);
    CHECK(t.max_asymmetry() == 0.0);
    const auto o = box(s, c);
    CHECK(std::abs(t(0, 0, 0) - o.T3[0]) <= 1e-6 * t(0, 0, 0));
    CHECK(std::abs(t(0, 1, 1) - o.T3[16 * 0 + 4 * 1 + 1]) <= 1e-6 * t(0, 1, 1));
    CHECK_THROWS_AS(rest_frame_third_moment(FluidState{1.0, Vec3(0.1, 0, 0), 1.0}, c), DomainError);
}

TEST_CASE("boosted third moment") {
    const double c = 20.0;
    FluidState rest{1.0, Vec3::Zero(), 1.0};
    CHECK(relative_gap(boosted_third_moment(rest, c), rest_frame_third_moment(rest, c)) <= 1e-15);

    FluidState s{1.0, Vec3(1.0, 0.0, 0.0), 1.0};
    const Tensor3 t = boosted_third_moment(s, c);
    const auto o = box(s, c);
    CHECK(std::abs(t(0, 0, 1) - o.T3[1]) <= 1e-5 * std::abs(t(0, 0, 1)));
    CHECK(t.max_asymmetry() == 0.0);

    std::mt19937_64 rng(5);
    for (double cc : {2.0, 10.0, 40.0}) {
        for (int k = 0; k < 20; ++k) {
            const FluidState r = random_state(rng, cc);
            const Tensor3 closed = boosted_third_moment(r, cc);
            FluidState r0 = r;
            r0.u.setZero();
            const Tensor3 contracted = contract_boost(lorentz_boost(r.u, cc), rest_frame_third_moment(r0, cc));
            CHECK(relative_gap(contracted, closed) <= 1e-10);
            CHECK(relative_gap(covariant_third(r, cc), closed) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(boosted_third_moment(FluidState{1.0, Vec3(20.0, 0, 0), 1.0}, c), DomainError);
}

TEST_CASE("library quadrature reproduces every closed form") {
    std::mt19937_64 rng(17);
    for (double c : {1.0, 10.0, 50.0}) {
        for (int k = 0; k < 3; ++k) {
            const FluidState s = random_state(rng, c);
            const MomentSet q = quadrature_moments(s, c);
            const FirstSecond m = first_second_moments(s, c);
            CHECK((q.I - m.I).cwiseAbs().maxCoeff() <= 1e-5 * m.I.cwiseAbs().maxCoeff());
            CHECK(relative_gap(q.T2, m.T2) <= 1e-5);
            CHECK(relative_gap(q.T3, boosted_third_moment(s, c)) <= 1e-5);
            CHECK(q.I[0] == doctest::Approx(s.n * s.u0(c) / c).epsilon(1e-6));
        }
    }
}

}  // TEST_SUITE
