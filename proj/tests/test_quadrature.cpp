#include "doctest.h"
#include "rvmb/quadrature.hpp"

#include <cmath>
#include <random>

using namespace rvmb;

namespace {

// exact sphere moment of x^a y^b z^c (all even): 2 G((a+1)/2) G((b+1)/2) G((c+1)/2) / G((a+b+c+3)/2)
double sphere_monomial(int a, int b, int c) {
    if (a % 2 || b % 2 || c % 2) return 0.0;
    return 2.0 * std::tgamma((a + 1) / 2.0) * std::tgamma((b + 1) / 2.0) * std::tgamma((c + 1) / 2.0) /
           std::tgamma((a + b + c + 3) / 2.0);
}

double monomial_error(const SphereQuadrature& q, int degree) {
    double worst = 0.0;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            for (int c = 0; a + b + c <= degree; ++c) {
                const double v = q.integrate([&](const Vec3& w) {
                    return std::pow(w(0), a) * std::pow(w(1), b) * std::pow(w(2), c);
                });
                worst = std::max(worst, std::abs(v - sphere_monomial(a, b, c)));
            }
    return worst;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre exactness") {
    // 150 and 192 are outside the GSL tables
    for (int n : {1, 4, 10, 32, 150, 192}) {
        const Rule1D r = gauss_legendre(n, -0.5, 2.0);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0;
            for (int i = 0; i < n; ++i) s += r.w[i] * std::pow(r.x[i], k);
            const double exact = (std::pow(2.0, k + 1) - std::pow(-0.5, k + 1)) / (k + 1);
            CHECK(s == doctest::Approx(exact).epsilon(1e-13));
        }
    }
    const Rule1D comp = gauss_legendre_composite(5, 7, 0.0, M_PI);
    double s = 0;
    for (std::size_t i = 0; i < comp.x.size(); ++i) s += comp.w[i] * std::sin(comp.x[i]);
    CHECK(comp.x.size() == 35);
    CHECK(s == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("adaptive Gauss-Kronrod") {
    const AdaptiveResult r = integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-13);
    CHECK(r.status == 0);
    CHECK(r.value == doctest::Approx(M_PI / 4).epsilon(1e-13));
    const AdaptiveResult s = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10);
    CHECK(s.value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("Lebedev and product rules integrate monomials exactly") {
    for (int d : {5, 7, 11, 17, 27, 41}) {
        const SphereQuadrature q = SphereQuadrature::lebedev(d);
        CHECK(q.degree == d);
        CHECK(std::abs(q.weight_sum() - 4 * M_PI) <= 1e-13);
        CHECK(monomial_error(q, std::min(d, 12)) <= 1e-13);
    }
    CHECK_THROWS_AS(SphereQuadrature::lebedev(26), DomainError);
    const SphereQuadrature p = SphereQuadrature::product(8, 16);
    CHECK(monomial_error(p, 12) <= 1e-13);
    const SphereQuadrature pa = SphereQuadrature::product_axis(Vec3(1, 2, -0.5), 8, 16, true);
    CHECK(std::abs(pa.weight_sum() - 4 * M_PI) <= 1e-13);
    CHECK(monomial_error(pa, 10) <= 1e-12);
    const Mat3 R = frame_from_axis(Vec3(0.3, -0.4, 2.0));
    CHECK((R.transpose() * R - Mat3::Identity()).norm() <= 1e-14);
    CHECK((R.col(2) - Vec3(0.3, -0.4, 2.0).normalized()).norm() <= 1e-15);
    CHECK(monomial_error(SphereQuadrature::lebedev(17).rotated(R), 12) <= 1e-13);
}

TEST_CASE("clustered rule resolves a near-singular kernel") {
    // int (1 - beta mu)^-3 domega = 4 pi / (1 - beta^2)^2
    const Vec3 axis(0.2, 0.9, -0.3);
    for (double beta : {0.5, 0.99, 0.999999}) {
        const SphereQuadrature q = SphereQuadrature::clustered(axis, beta, 48, 4);
        const Vec3 a = axis.normalized();
        const double v = q.integrate([&](const Vec3& w) { return std::pow(1.0 - beta * a.dot(w), -3); });
        // 1 - beta mu ~ 1e-6 at the pole, so rounding of mu alone costs ~1e-10 there
        const double tol = beta > 0.9999 ? 1e-9 : 1e-12;
        CHECK(std::abs(q.weight_sum() - 4 * M_PI) <= 1e-13);
        CHECK(v == doctest::Approx(4 * M_PI / std::pow((1 - beta) * (1 + beta), 2)).epsilon(tol));
    }
}

TEST_CASE("ball grid") {
    const MomentumGrid g = ball_grid(Vec3(1, -2, 0.5), 3.0, 24, SphereQuadrature::lebedev(11));
    double vol = 0, r2 = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        vol += g.w[i];
        const Vec3 d = Vec3(g.px[i], g.py[i], g.pz[i]) - Vec3(1, -2, 0.5);
        r2 += g.w[i] * d.squaredNorm();
    }
    CHECK(vol == doctest::Approx(4 * M_PI * 27 / 3).epsilon(1e-13));
    CHECK(r2 == doctest::Approx(4 * M_PI * std::pow(3.0, 5) / 5).epsilon(1e-13));
}

}  // TEST_SUITE
