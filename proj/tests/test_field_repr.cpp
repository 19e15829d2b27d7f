#include "doctest.h"
#include "oracles/field_kernels.hpp"
#include "rvmb/field_repr.hpp"

#include <cmath>
#include <random>

using namespace rvmb;
using namespace rvmb::field;
using oracle::Raw;

namespace {

Vec3 unit(std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    return Vec3(N(rng), N(rng), N(rng)).normalized();
}

}  // namespace

TEST_SUITE("field_repr") {

TEST_CASE("golden values at p = 0") {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
        const Vec3 w = unit(rng);
        const KernelSet k = kernels(w, Vec3::Zero(), 3.0);
        const Mat3 ww = w * w.transpose();
        CHECK((k.aA - (3 * ww - Mat3::Identity())).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK((k.bA - (3 * ww - Mat3::Identity())).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK((k.cA - ww).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(k.aB.isZero(0.0));
        CHECK(k.bB.isZero(0.0));
        CHECK(k.cB.isZero(0.0));
    }
    // a locked value: omega = e1, (i,j) = (1,1)
    const auto v = eval_kernels(Vec3(1, 0, 0), Vec3::Zero(), 1.0, 0, 0);
    CHECK(v[0] == 2.0);
    CHECK(v[1] == 2.0);
    CHECK(v[2] == 1.0);
}

TEST_CASE("kernels match the literal formulas") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int n = 0; n < 200; ++n) {
        const double c = std::pow(10.0, 2 * U(rng) - 0.5);
        const Vec3 p = unit(rng) * 3 * c * U(rng);
        const Vec3 w = unit(rng);
        const KernelSet k = kernels(w, p, c);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Raw r = oracle::raw_kernels(w, p, c, i, j);
                const double got[6] = {k.aA(i, j), k.bA(i, j), k.cA(i, j), k.aB(i, j), k.bB(i, j), k.cB(i, j)};
                const double want[6] = {r.aA, r.bA, r.cA, r.aB, r.bB, r.cB};
                for (int m = 0; m < 6; ++m) CHECK(got[m] == doctest::Approx(want[m]).epsilon(1e-10).scale(1.0));
            }
    }
}

TEST_CASE("a_B vanishes when p is parallel to omega") {
    const Vec3 w(0, 0, 1);
    const KernelSet k = kernels(w, Vec3(0, 0, 2.5), 1.0);
    // omega x phat = 0 and (e_3 x phat) = 0
    for (int i = 0; i < 3; ++i) CHECK(k.aB(i, 2) == 0.0);
    CHECK(k.cB.isZero(0.0));
    CHECK(k.aB(0, 1) != 0.0);
}

TEST_CASE("denominators stay positive and the bound is attained") {
    std::mt19937_64 rng(3);
    for (double pn : {0.0, 0.5, 4.0, 100.0, 1e4}) {
        const Vec3 p = pn * unit(rng);
        const double c = 1.0;
        const double lower = 1.0 / denominator_bound(p, c, 1);
        for (int n = 0; n < 100; ++n) CHECK(denominator(unit(rng), p, c) >= lower * (1 - 1e-12));
        if (pn > 0) CHECK(denominator(-p.normalized(), p, c) == doctest::Approx(lower).epsilon(1e-12));
    }
    // m = 2, |p| = 4, c = 1 against a direct maximisation over omega
    const Vec3 p(0, 0, 4);
    const double p0 = std::sqrt(17.0);
    CHECK(denominator_bound(p, 1.0, 2) == doctest::Approx(std::pow(p0 * (p0 + 4), 2)).epsilon(1e-14));
    double best = 0.0;
    for (const Vec3& w : SphereQuadrature::product(200, 8).nodes) best = std::max(best, std::pow(1 + p.dot(w) / p0, -2.0));
    best = std::max(best, std::pow(1 + p.dot(Vec3(0, 0, -1)) / p0, -2.0));
    CHECK(best == doctest::Approx(denominator_bound(p, 1.0, 2)).epsilon(1e-12));
    CHECK(denominator_bound(Vec3::Zero(), 2.0, 5) == 1.0);
    CHECK(denominator_bound(Vec3(1, 1, 1), 1e6, 3) == doctest::Approx(1.0).epsilon(1e-5));
    // p0 (p0 + |p|) <= 2 (1 + |p|)^2 at c = 1
    for (double pn : {1.0, 10.0, 100.0, 1e4})
        CHECK(denominator_bound(Vec3(pn, 0, 0), 1.0, 3) <= 8.0 * std::pow(1 + pn, 6));
    CHECK_THROWS_AS(denominator_bound(p, 1.0, -1), DomainError);
}

TEST_CASE("sphere rules integrate to 4 pi") {
    for (int d : {5, 7, 11, 17, 27, 41})
        CHECK(SphereQuadrature::lebedev(d).weight_sum() == doctest::Approx(4 * M_PI).epsilon(1e-13));
    const auto q = SphereQuadrature::clustered(Vec3(1, 2, 3), 0.999, 32, 8);
    CHECK(q.weight_sum() == doctest::Approx(4 * M_PI).epsilon(1e-13));
}

TEST_CASE("null angular averages") {
    SUBCASE("p = 0 analytically") {
        const NullCheck n = angular_null_check(Vec3::Zero(), 1.0);
        CHECK(n.max_abs() <= 1e-13);
        CHECK(n.rule.name.rfind("lebedev", 0) == 0);
    }
    SUBCASE("c = 1, p = (2,1,0), all (i,j)") {
        const NullCheck n = angular_null_check(Vec3(2, 1, 0), 1.0);
        CHECK(n.aA.cwiseAbs().maxCoeff() <= 1e-8);
        CHECK(n.aB.cwiseAbs().maxCoeff() <= 1e-8);
    }
    SUBCASE("30 random (p, c)") {
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        double worst = 0.0;
        for (int n = 0; n < 30; ++n) {
            const double c = std::pow(10.0, 2 * U(rng));
            const Vec3 p = unit(rng) * 10 * c * U(rng);
            worst = std::max(worst, angular_null_check(p, c).max_abs());
        }
        MESSAGE("worst null average " << worst);
        CHECK(worst <= 1e-8);
    }
    SUBCASE("beyond |p| = 10c the clustered rule is used") {
        const NullCheck n = angular_null_check(Vec3(0, 30, 40), 1.0);
        CHECK(n.rule.name == "clustered");
        CHECK(n.max_abs() <= 1e-8);
    }
}

TEST_CASE("null averages against an adaptive oracle") {
    // individual terms are large while their sum vanishes; the oracle sees the same cancellation
    const Vec3 p(1.0, -2.0, 0.5);
    const double c = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double a = oracle::sphere_gk([&](const Vec3& w) { return oracle::raw_kernels(w, p, c, i, j).aA; }, p);
            const double b = oracle::sphere_gk([&](const Vec3& w) { return oracle::raw_kernels(w, p, c, i, j).aB; }, p);
            CHECK(std::abs(a) <= 1e-8);
            CHECK(std::abs(b) <= 1e-8);
        }
    // a non-null average, to make sure the oracle is not trivially zero
    const double cint = oracle::sphere_gk([&](const Vec3& w) { return oracle::raw_kernels(w, p, c, 0, 0).cA; }, p);
    CHECK(std::abs(cint) > 0.1);
}

TEST_CASE("reference integrals") {
    SUBCASE("p = 0") {
        const ReferenceIntegrals r = reference_integrals(Vec3::Zero(), 1.0);
        CHECK(r.I2 == doctest::Approx(4 * M_PI).epsilon(1e-13));
        CHECK(r.I3.norm() == 0.0);
    }
    SUBCASE("p = (3,0,0), c = 2") {
        const Vec3 p(3, 0, 0);
        const ReferenceIntegrals r = reference_integrals(p, 2.0);
        CHECK(std::abs(r.I2 - 4 * M_PI) <= 1e-10);
        CHECK((r.I3 - r.I3_stated).norm() <= 1e-10 * r.I3_stated.norm());
        CHECK((r.I3_closed - r.I3_stated).norm() <= 1e-14 * r.I3_stated.norm());
        const double oracle =
            oracle::sphere_gk([&](const Vec3& w) { return std::pow(std::sqrt(1 + 9.0 / 4) + p.dot(w) / 2, -2.0); }, p);
        CHECK(oracle == doctest::Approx(4 * M_PI).epsilon(1e-12));
    }
    SUBCASE("I2 is 4 pi for every sampled (p, c)") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        for (int n = 0; n < 30; ++n) {
            const double c = std::pow(10.0, 2 * U(rng) - 0.5);
            const Vec3 p = unit(rng) * 30 * c * U(rng);
            const ReferenceIntegrals r = reference_integrals(p, c);
            CHECK(std::abs(r.I2 - 4 * M_PI) <= 1e-10);
            CHECK((r.I3 - r.I3_stated).norm() <= 1e-10 * (1 + r.I3_stated.norm()));
        }
    }
}

TEST_CASE("kernel growth exponent at c = 1") {
    std::vector<double> ps;
    for (double x = 1; x <= 64; x *= 2) ps.push_back(x);
    const GrowthReport g = kernel_growth(ps, 1.0);
    MESSAGE("slope " << g.slope << ", max local slope " << g.max_local_slope << ", C " << g.C);
    CHECK(g.slope <= 8.0);
    CHECK(g.max_local_slope <= 8.0);
    for (std::size_t k = 0; k < ps.size(); ++k) CHECK(g.value[k] <= g.C * std::pow(1 + ps[k], 8) * (1 + 1e-12));
    CHECK(std::isfinite(g.C));
}

}
