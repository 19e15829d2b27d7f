#pragma once

// Independent references for K_j: tanh-sinh quadrature of the defining integral
// in its original variable t, and Boost's series/continued-fraction implementation.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace oracle {

// e^z K_j(z) = (z/2)^j sqrt(pi)/Gamma(j+1/2) int_1^inf e^{-z(t-1)} (t^2-1)^{j-1/2} dt
inline double bessel_k_scaled_quad(int j, double z) {
    boost::math::quadrature::exp_sinh<double> integrator;
    // s = t - 1 keeps the endpoint singularity at the origin
    auto f = [&](double s) {
        if (s <= 0.0) return 0.0;
        return std::exp(-z * s + (j - 0.5) * std::log(s * (s + 2.0)));
    };
    double err = 0.0;
    const double I = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15, &err);
    return std::pow(z / 2.0, j) * std::sqrt(M_PI) / boost::math::tgamma(j + 0.5) * I;
}

inline double bessel_k_boost(int j, double z) { return boost::math::cyl_bessel_k(j, z); }

}  // namespace oracle
