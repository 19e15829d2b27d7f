#pragma once

// Field kernels transcribed literally from their defining formulas, and an adaptive
// Gauss-Kronrod sphere integral to check their angular averages.

#include "rvmb/common.hpp"
#include "rvmb/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace oracle {

using rvmb::Mat3;
using rvmb::Vec3;

// Kernels transcribed literally, phat = c p / p0 and no cancellation control
struct Raw {
    double aA, bA, cA, aB, bB, cB;
};

inline Raw raw_kernels(const Vec3& w, const Vec3& p, double c, int i, int j) {
    const double p0 = std::sqrt(c * c + p.squaredNorm());
    const Vec3 ph = c * p / p0;
    const double D = 1.0 + ph.dot(w) / c;
    const double ph2 = ph.squaredNorm() / (c * c);
    const double A = 1.0 + p.squaredNorm() / (c * c);
    const double d = i == j ? 1.0 : 0.0;
    const Vec3 cr = w.cross(ph / c);
    Vec3 ej = Vec3::Zero();
    ej[j] = 1.0;
    const double ejx = ej.cross(ph / c)[i];
    Raw r;
    r.aA = (3 * (w[i] + ph[i] / c) * (w[j] * (1 - ph2) + ph[j] / c * D) - D * D * d) / (A * std::pow(D, 4));
    r.bA = -((w[i] + ph[i] / c) * (3 * w[j] * (ph2 - 1) - 2 * ph[j] / c * D) + D * D * d) / std::pow(D, 3);
    r.cA = (w[i] + ph[i] / c) * w[j] / (D * D);
    r.aB = (-3 * cr[i] * (w[j] * (1 - ph2) + ph[j] / c * D) + D * D * ejx) / (A * std::pow(D, 4));
    r.bB = (cr[i] * (3 * w[j] * (ph2 - 1) - 2 * ph[j] / c * D) + D * D * ejx) / std::pow(D, 3);
    r.cB = -cr[i] * w[j] / (D * D);
    return r;
}

// adaptive Gauss-Kronrod in mu about the p axis, trapezoid in phi (exact for the
// low azimuthal degree of these integrands)
template <class F>
double sphere_gk(F&& f, const Vec3& p) {
    const Mat3 R = rvmb::frame_from_axis(p.norm() > 0 ? Vec3(p) : Vec3(0, 0, 1));
    const int n_phi = 16;
    double total = 0.0;
    for (int k = 0; k < n_phi; ++k) {
        const double phi = 2 * M_PI * k / n_phi;
        auto g = [&](double mu) {
            const double s = std::sqrt(std::max(0.0, 1 - mu * mu));
            return f(R * Vec3(s * std::cos(phi), s * std::sin(phi), mu));
        };
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, -1.0, 1.0, 15, 1e-14) * 2 * M_PI /
                 n_phi;
    }
    return total;
}

}  // namespace oracle
