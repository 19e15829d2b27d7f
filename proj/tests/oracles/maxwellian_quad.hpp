#pragma once

// Cartesian tensor-product Gauss-Legendre over a box around the drift momentum, with the
// Juttner density written in its textbook form. Shares nothing with the library's spherical grids.

#include "oracles/bessel_oracle.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace oracle {

struct MomentsOut {
    std::array<double, 4> I{};
    std::array<std::array<double, 4>, 4> T2{};
    std::array<double, 64> T3{};  // index 16 i + 4 j + k
};

// n, u (spatial), T, c; box half-width L per axis; `panels` panels of 12 GL nodes per axis
inline MomentsOut juttner_moments_box(double n, const std::array<double, 3>& u, double T, double c, double L,
                                      int panels = 6) {
    const double g = c * c / T;
    const double u0 = std::sqrt(c * c + u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    const double pref = n * g / (4.0 * M_PI * c * c * c * bessel_k_scaled_quad(2, g));
    using GL = boost::math::quadrature::gauss<double, 12>;
    std::array<std::vector<double>, 3> x, w;
    for (int a = 0; a < 3; ++a) {
        const double lo = u[a] - L, h = 2.0 * L / panels;
        for (int k = 0; k < panels; ++k) {
            const double m = lo + (k + 0.5) * h;
            // boost stores the non-negative half of the symmetric rule
            for (std::size_t i = 0; i < GL::abscissa().size(); ++i) {
                const double xi = GL::abscissa()[i], wi = GL::weights()[i];
                x[a].push_back(m + 0.5 * h * xi);
                w[a].push_back(0.5 * h * wi);
                if (xi != 0.0) {
                    x[a].push_back(m - 0.5 * h * xi);
                    w[a].push_back(0.5 * h * wi);
                }
            }
        }
    }
    MomentsOut out;
    for (std::size_t i = 0; i < x[0].size(); ++i)
        for (std::size_t j = 0; j < x[1].size(); ++j)
            for (std::size_t k = 0; k < x[2].size(); ++k) {
                const double p[4] = {0.0, x[0][i], x[1][j], x[2][k]};
                const double p0 = std::sqrt(c * c + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
                const double arg = -(u0 * p0 - u[0] * p[1] - u[1] * p[2] - u[2] * p[3]) / T + g;
                const double v[4] = {p0, p[1], p[2], p[3]};
                const double wt = w[0][i] * w[1][j] * w[2][k] * pref * std::exp(arg) / p0;
                for (int a = 0; a < 4; ++a) {
                    out.I[a] += wt * v[a];
                    for (int b = 0; b < 4; ++b) {
                        out.T2[a][b] += wt * v[a] * v[b];
                        for (int e = 0; e < 4; ++e) out.T3[16 * a + 4 * b + e] += wt * v[a] * v[b] * v[e];
                    }
                }
            }
    return out;
}

}  // namespace oracle
