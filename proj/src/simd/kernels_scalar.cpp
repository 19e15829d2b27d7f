#include "rvmb/simd.hpp"

#include <algorithm>
#include <cmath>

namespace rvmb::simd::scalar {

void juttner_batch(const JuttnerParams& jp, const double* px, const double* py, const double* pz, std::size_t n,
                   double* out, double* p0_out) {
    const double c = jp.c;
    const double u2 = jp.ux * jp.ux + jp.uy * jp.uy + jp.uz * jp.uz;
    const double ushift = c * u2 / (jp.u0 + c);
    for (std::size_t i = 0; i < n; ++i) {
        const double p2 = px[i] * px[i] + py[i] * py[i] + pz[i] * pz[i];
        const double p0 = std::sqrt(c * c + p2);
        const double up = jp.ux * px[i] + jp.uy * py[i] + jp.uz * pz[i];
        const double x = jp.u0 * p2 / (p0 + c) + ushift - up;
        out[i] = jp.pref * std::exp(-x * jp.inv_T);
        if (p0_out) p0_out[i] = p0;
    }
}

void invariants_batch(double c, double px, double py, double pz, const double* qx, const double* qy,
                      const double* qz, std::size_t n, double* g, double* s, double* vphi) {
    const double p2 = px * px + py * py + pz * pz;
    const double p0 = std::sqrt(c * c + p2);
    for (std::size_t i = 0; i < n; ++i) {
        const double q2 = qx[i] * qx[i] + qy[i] * qy[i] + qz[i] * qz[i];
        const double q0 = std::sqrt(c * c + q2);
        const double dx = px - qx[i], dy = py - qy[i], dz = pz - qz[i];
        const double sx = px + qx[i], sy = py + qy[i], sz = pz + qz[i];
        const double e = p0 + q0;
        const double ds = (dx * sx + dy * sy + dz * sz) / e;
        // g^2 = |p-q|^2 - (p0-q0)^2 with p0-q0 = (p-q).(p+q)/(p0+q0)
        const double g2 = std::max(0.0, dx * dx + dy * dy + dz * dz - ds * ds);
        const double pq = px * qx[i] + py * qy[i] + pz * qz[i];
        const double ss = 2.0 * (p0 * q0 - pq + c * c);
        const double gg = std::sqrt(g2);
        g[i] = gg;
        s[i] = ss;
        vphi[i] = 0.25 * c * gg * std::sqrt(ss) / (p0 * q0);
    }
}

}  // namespace rvmb::simd::scalar
