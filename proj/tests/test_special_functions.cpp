#include "doctest.h"
#include "oracles/bessel_oracle.hpp"
#include "rvmb/special_functions.hpp"
#include "rvmb/common.hpp"

#include <cmath>
#include <vector>

using namespace rvmb::special_functions;

TEST_SUITE("special_functions") {

TEST_CASE("K2(1) against the tanh-sinh oracle and boost") {
    const double ref = oracle::bessel_k_scaled_quad(2, 1.0) * std::exp(-1.0);
    const BesselValue k = bessel_k(2, 1.0);
    CHECK(std::abs(k.value - ref) / ref < 1e-10);
    CHECK(std::abs(k.value - oracle::bessel_k_boost(2, 1.0)) / ref < 1e-12);
    CHECK(k.estimated_abs_error <= 1e-12 * std::max(1.0, k.value));
}

TEST_CASE("orders 0..4 across z match boost") {
    for (int j = 0; j <= 4; ++j)
        for (double z : {0.5, 1.0, 3.0, 10.0, 50.0, 200.0, 500.0}) {
            const double ref = oracle::bessel_k_boost(j, z);
            const double got = bessel_k(j, z).value;
            INFO("j=" << j << " z=" << z);
            CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, ref) + 1e-13 * ref);
        }
}

TEST_CASE("scaled value survives past underflow") {
    const double s = bessel_k_scaled(2, 2000.0).value;
    CHECK(std::abs(s * std::sqrt(2 * 2000.0 / M_PI) - 1.0) < 1e-2);
    CHECK(bessel_k(2, 2000.0).value == 0.0);
}

TEST_CASE("large-z normalisation") {
    const double z = 200.0;
    CHECK(std::abs(bessel_k_scaled(2, z).value * std::sqrt(2 * z / M_PI) - 1.0) < 1e-2);
}

TEST_CASE("recurrence at z=5") {
    const double k1 = bessel_k(1, 5).value, k2 = bessel_k(2, 5).value, k3 = bessel_k(3, 5).value;
    CHECK(std::abs(k3 - 0.8 * k2 - k1) <= 1e-12 * k3);
}

TEST_CASE("asymptotic coefficients") {
    for (int j = 0; j < 5; ++j) CHECK(asymptotic_coefficient(j, 0) == 1.0);
    CHECK(asymptotic_coefficient(2, 1) == doctest::Approx(15.0 / 8));
    CHECK(asymptotic_coefficient(2, 2) == doctest::Approx(105.0 / 128));
    CHECK(asymptotic_coefficient(2, 3) == doctest::Approx(-945.0 / (6 * 512)));
    CHECK(asymptotic_coefficient(2, 4) == doctest::Approx(31185.0 / (24 * 4096)));
    CHECK(asymptotic_coefficient(3, 1) == doctest::Approx(35.0 / 8));
    CHECK(asymptotic_coefficient(3, 2) == doctest::Approx(945.0 / 128));
    CHECK(asymptotic_coefficient(3, 3) == doctest::Approx(10395.0 / (6 * 512)));
    CHECK(asymptotic_coefficient(3, 4) == doctest::Approx(-135135.0 / (24 * 4096)));
    const BesselSeries s = bessel_series(3, 4);
    CHECK(s.coefficients.size() == 5);
    CHECK(bessel_k_asymptotic(4, 10.0, 1).value == doctest::Approx(std::sqrt(M_PI / 20) * std::exp(-10.0)));
}

TEST_CASE("n=5 series error scales like z^-5") {
    double cmax = 0.0;
    for (double z : {10.0, 20.0, 40.0}) {
        const double diff = std::abs(bessel_k_scaled(2, z).value - bessel_k_asymptotic_scaled(2, z, 5).value);
        cmax = std::max(cmax, diff * std::pow(z, 5) / std::sqrt(M_PI / (2 * z)));
    }
    // |A_{2,5}| = 0.5155...
    CHECK(cmax < 0.6);
}

TEST_CASE("remainder within the gamma bound") {
    for (int j = 0; j <= 4; ++j)
        for (int n = 1; n <= 6; ++n)
            for (double z : {2.0, 5.0, 10.0, 30.0, 100.0}) {
                if (z < 2 * j) continue;
                const BesselValue a = bessel_k_asymptotic_scaled(j, z, n);
                const double ref = oracle::bessel_k_scaled_quad(j, z);
                INFO("j=" << j << " n=" << n << " z=" << z);
                CHECK(std::abs(ref - a.value) <= a.estimated_abs_error + 1e-14 * ref);
            }
}

TEST_CASE("K3/K2 expansion residual is O(z^-4)") {
    std::vector<double> lz, lr;
    for (double z = 10; z <= 160; z *= 2) {
        const double r = bessel_k_scaled(3, z).value / bessel_k_scaled(2, z).value;
        const double res = r - 1 - 2.5 / z - 15.0 / (8 * z * z) + 15.0 / (8 * z * z * z);
        lz.push_back(std::log(z));
        lr.push_back(std::log(std::abs(res)));
    }
    const double slope = (lr.back() - lr.front()) / (lz.back() - lz.front());
    CHECK(slope == doctest::Approx(-4.0).epsilon(0.05));
}

TEST_CASE("ratio series and quadrature agree where both are valid") {
    for (double z : {40.0, 60.0, 100.0, 300.0, 650.0}) {
        const RatioExpansion a = bessel_ratio_quadrature(z), b = bessel_ratio_series(z);
        INFO("z=" << z);
        CHECK(std::abs(a.rho - b.rho) <= 1e-12 * b.rho);
        CHECK(std::abs(a.q - b.q) <= 1e-13 * z * z * std::abs(b.q) + 1e-16);
    }
    // q = -3/(2z^2) - 15/(4z^3) + 45/(8 z^4) + O(z^-5)
    const double z = 1e4;
    const double q = bessel_ratio(z).q;
    CHECK(q == doctest::Approx(-1.5 / (z * z) - 3.75 / (z * z * z)).epsilon(1e-8));
}

TEST_CASE("identity suite") {
    std::vector<double> zs;
    for (double z = 0.5; z <= 500; z *= 1.7) zs.push_back(z);
    const IdentityReport r = bessel_identity_suite(zs);
    CHECK(r.max_recurrence_rel <= 1e-12);
    CHECK(r.max_derivative_rel <= 1e-7);
    CHECK(r.monotone);
    const IdentityReport r3 = bessel_identity_suite({3.0});
    CHECK(r3.max_derivative_rel <= 1e-7);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_k(2, 0.0), rvmb::DomainError);
    CHECK_THROWS_AS(bessel_k(-1, 1.0), rvmb::DomainError);
    CHECK_THROWS_AS(bessel_k_asymptotic(2, 1.0, 0), rvmb::DomainError);
}

}
