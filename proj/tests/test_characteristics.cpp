#include "doctest.h"
#include "rvmb/characteristics.hpp"

#include <cmath>
#include <random>

using namespace rvmb;
using namespace rvmb::characteristics;

namespace {

Vec3 random_ball(std::mt19937_64& rng, double r) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    Vec3 v;
    do v = Vec3(U(rng), U(rng), U(rng));
    while (v.squaredNorm() > 1.0);
    return r * v;
}

double max_entry(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("characteristics") {

TEST_CASE("free streaming is reproduced exactly") {
    const double c = 10.0;
    const PhaseState init{Vec3(0.5, -1.0, 2.0), Vec3(3.0, 1.0, -4.0), 0.7};
    for (double tau : {0.0, 1.9}) {
        const auto traj = integrate_characteristics(init, zero_fields(), tau, c);
        CHECK(traj.size() == 2049);
        CHECK(traj.front().X == init.X);
        CHECK(traj.front().P == init.P);
        CHECK(traj.back().t == tau);
        const double p0 = energy(init.P, c);
        const Vec3 expect = init.X + (tau - init.t) * c * init.P / p0;
        CHECK((traj.back().P - init.P).norm() == 0.0);
        CHECK((traj.back().X - expect).norm() <= 1e-12 * (1.0 + expect.norm()));
    }
}

TEST_CASE("momentum magnitude conserved over one gyration") {
    const double c = 5.0, B0 = 2.0;
    const Vec3 p(1.5, -0.5, 0.8);
    const double period = 2.0 * M_PI * energy(p, c) / B0;
    const auto traj = integrate_characteristics({Vec3::Zero(), p, 0.0}, constant_fields(Vec3::Zero(), Vec3(0, 0, B0)),
                                                period, c);
    double worst = 0.0;
    for (const auto& s : traj) worst = std::max(worst, std::abs(s.P.norm() - p.norm()) / p.norm());
    CHECK(worst <= 1e-10);
    // after a full period the perpendicular momentum returns
    CHECK((traj.back().P - p).norm() <= 1e-8);
}

TEST_CASE("momentum drift bounded by field size") {
    const FieldSampler f = trig_fields(7, 1.0);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const PhaseState init{random_ball(rng, 3.0), random_ball(rng, 5.0), 1.0};
        const auto traj = integrate_characteristics(init, f, 0.0, 10.0, {256});
        for (const auto& s : traj)
            CHECK((s.P - init.P).norm() <= std::abs(init.t - s.t) * f.sup * (1.0 + 1e-12) + 1e-15);
    }
}

TEST_CASE("trig fields advertise valid bounds") {
    const FieldSampler f = trig_fields(11, 1.0);
    CHECK(f.sup + f.L <= 1.0 + 1e-14);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const Vec3 x = random_ball(rng, 10.0), y = random_ball(rng, 10.0);
        const double t = 0.3 * k;
        CHECK(f.E(t, x).norm() + f.B(t, x).norm() <= f.sup + 1e-15);
        CHECK((f.E(t, x) - f.E(t, y)).norm() <= f.L * (x - y).norm() + 1e-15);
        CHECK((f.B(t, x) - f.B(t, y)).norm() <= f.L * (x - y).norm() + 1e-15);
        // analytic gradient against central differences
        const double h = 1e-6;
        for (int l = 0; l < 3; ++l) {
            Vec3 xp = x, xm = x;
            xp[l] += h;
            xm[l] -= h;
            const Vec3 fd = (f.E(t, xp) - f.E(t, xm)) / (2 * h);
            CHECK((fd - f.gradE(t, x).col(l)).norm() <= 1e-8);
        }
    }
}

TEST_CASE("zero-field Jacobian and determinant") {
    const double c = 3.0;
    const Vec3 p(1.0, 2.0, -0.5);
    const PhaseState init{Vec3(1, 1, 1), p, 0.4};
    const auto traj = variational_jacobian(init, zero_fields(), 0.0, c);
    CHECK(traj.front().dX.isZero(0.0));
    CHECK(traj.front().dP.isIdentity(0.0));
    for (std::size_t i : {std::size_t(512), std::size_t(2048)}) {
        const auto& s = traj[i];
        const double dt = s.phase.t - init.t;
        const Mat3 expect = free_streaming_jacobian(p, dt, c);
        CHECK(max_entry(s.dX - expect) <= 1e-14);
        CHECK(s.dP.isIdentity(0.0));
        const double p0 = energy(p, c);
        const double central = std::pow(c, 5) * std::pow(std::abs(dt), 3) / std::pow(p0, 5);
        CHECK(std::abs(s.dX.determinant()) == doctest::Approx(central).epsilon(1e-12));
        // hand-expanded: (c dt/p0)^3 c^2/(p0)^2
        CHECK(std::abs(s.dX.determinant()) ==
              doctest::Approx(std::pow(c * std::abs(dt) / p0, 3) * c * c / (p0 * p0)).epsilon(1e-12));
    }
}

TEST_CASE("variational equations match finite differences") {
    std::mt19937_64 rng(21);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const FieldSampler f = trig_fields(100 + k, 1.0);
        const double c = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 10.0 : 100.0);
        const PhaseState init{random_ball(rng, 3.0), random_ball(rng, 5.0), 0.5};
        const Integration opt{512};
        const VariationalState v = variational_jacobian(init, f, 0.0, c, opt).back();
        const FdJacobian fd = fd_jacobian(init, f, 0.0, c, 1e-5, opt);
        worst = std::max({worst, max_entry(v.dX - fd.dX), max_entry(v.dP - fd.dP)});
    }
    MESSAGE("variational vs FD worst entry " << worst);
    CHECK(worst <= 1e-6);
}

TEST_CASE("variational equations with finite-difference field gradients") {
    FieldSampler f = trig_fields(9, 1.0);
    const FieldSampler exact = f;
    f.gradE = nullptr;
    f.gradB = nullptr;
    const PhaseState init{Vec3(0.2, 0.1, -0.3), Vec3(2.0, -1.0, 0.5), 0.5};
    const auto a = variational_jacobian(init, f, 0.0, 10.0, {256}).back();
    const auto b = variational_jacobian(init, exact, 0.0, 10.0, {256}).back();
    CHECK(max_entry(a.dX - b.dX) <= 1e-8);
    CHECK(max_entry(a.dP - b.dP) <= 1e-8);
}

TEST_CASE("non-finite fields raise with the last good time") {
    FieldSampler f = zero_fields();
    f.E = [](double t, const Vec3&) { return t < 0.5 ? Vec3::Zero().eval() : Vec3(NAN, 0, 0); };
    try {
        integrate_characteristics({Vec3::Zero(), Vec3(1, 0, 0), 0.0}, f, 1.0, 1.0, {100});
        FAIL("expected IntegrationFailure");
    } catch (const IntegrationFailure& e) {
        CHECK(e.last_good_tau < 0.5);
        CHECK(e.last_good_tau > 0.4);
    }
    CHECK_THROWS_AS(integrate_characteristics({}, FieldSampler{}, 1.0, 1.0), DomainError);
}

TEST_CASE("zero field gives C = 1") {
    BoundsConfig cfg;
    cfg.samples = 10;
    cfg.horizon = 0.1;
    const BoundsReport r = jacobian_bounds_check(zero_fields(), 10.0, cfg);
    CHECK(r.C == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.max_perturbation <= 1e-10);
    CHECK(r.min_energy_ratio == 1.0);
    CHECK(r.lemma_holds(1.0 + 1e-12));
}

TEST_CASE("Jacobian determinant bounds for smooth fields") {
    const FieldSampler f = trig_fields(1, 1.0);
    BoundsConfig cfg;
    cfg.horizon = 0.05;
    const BoundsReport r = jacobian_bounds_check(f, 10.0, cfg);
    MESSAGE("C = " << r.C << ", perturbation " << r.max_perturbation << ", energy ratio " << r.min_energy_ratio);
    CHECK(r.samples == 400);
    CHECK(r.C <= 4.0);
    CHECK(r.max_perturbation <= 0.25);
    CHECK(r.min_energy_ratio >= 0.5);
    CHECK(r.max_drift_ratio <= 1.0 + 1e-12);

    // default horizon 0.1 min(1, 1/L)
    const BoundsReport d = jacobian_bounds_check(f, 10.0, BoundsConfig{});
    CHECK(d.horizon == doctest::Approx(0.1));
    CHECK(d.lemma_holds(4.0));
}

}
