#include "rvmb/moments.hpp"

#include "rvmb/quadrature.hpp"
#include "rvmb/simd.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rvmb::moments {

namespace sf = special_functions;

Mat4 metric() { return Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal(); }

Vec4 lower(const Vec4& v) { return Vec4(-v[0], v[1], v[2], v[3]); }
Vec4 raise(const Vec4& v) { return lower(v); }

double Tensor3::max_abs() const {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

double Tensor3::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const double v = (*this)(i, j, k);
                m = std::max({m, std::abs(v - (*this)(j, i, k)), std::abs(v - (*this)(i, k, j)),
                              std::abs(v - (*this)(k, j, i))});
            }
    return m;
}

Mat4 lorentz_boost(const Vec3& u, double c) {
    const double u0 = std::sqrt(c * c + u.squaredNorm());
    Mat4 L = Mat4::Identity();
    L(0, 0) = u0 / c;
    for (int i = 0; i < 3; ++i) {
        L(0, i + 1) = u[i] / c;
        L(i + 1, 0) = u[i] / c;
        // (r - 1) v_i v_j / |v|^2 with r = u0/c, v = c u/u0, written without the 0/0
        for (int j = 0; j < 3; ++j) L(i + 1, j + 1) += u[i] * u[j] / (c * (u0 + c));
    }
    return L;
}

namespace {

Vec4 four_velocity(const thermo::FluidState& s, double c) { return Vec4(s.u0(c), s.u[0], s.u[1], s.u[2]); }

}  // namespace

FirstSecond first_second_moments(const thermo::FluidState& s, double c) {
    s.validate();
    const Vec4 U = four_velocity(s, c);
    const double r = sf::bessel_ratio(thermo::gamma_of(s.T, c)).r;
    FirstSecond m;
    m.I = s.n * U / c;
    // (e + P)/c^3 U U + (P/c) g with e + P = n c^2 K3/K2
    m.T2 = (s.n * r / c) * (U * U.transpose()) + (s.n * s.T / c) * metric();
    return m;
}

Tensor3 rest_frame_third_moment(const thermo::FluidState& s, double c) {
    s.validate();
    if (s.u.squaredNorm() != 0.0) throw DomainError("rest_frame_third_moment: u must vanish");
    const double r = sf::bessel_ratio(thermo::gamma_of(s.T, c)).r;
    const double side = s.n * s.T * r;  // n c^2 K3/(gamma K2)
    Tensor3 t;
    t(0, 0, 0) = s.n * c * c + 3.0 * side;
    for (int i = 1; i < 4; ++i) t(0, i, i) = t(i, 0, i) = t(i, i, 0) = side;
    return t;
}

Tensor3 boosted_third_moment(const thermo::FluidState& s, double c) {
    s.validate();
    if (!(s.u.norm() < c)) throw DomainError("boosted_third_moment: need |u| < c");
    const double g = thermo::gamma_of(s.T, c);
    const double k = sf::bessel_ratio(g).r / g;  // K3/(gamma K2)
    const double pre = s.n / c, u0 = s.u0(c), uu = s.u.squaredNorm();
    const double a3 = 1.0 + 3.0 * k, a5 = 1.0 + 5.0 * k, a6 = 1.0 + 6.0 * k;
    const Vec3& u = s.u;
    Tensor3 t;
    t(0, 0, 0) = pre * (a3 * u0 * u0 * u0 + 3.0 * k * u0 * uu);
    for (int i = 0; i < 3; ++i) {
        const double v = pre * (a5 * u0 * u0 * u[i] + k * uu * u[i]);
        t(0, 0, i + 1) = t(0, i + 1, 0) = t(i + 1, 0, 0) = v;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double v = pre * (a6 * u0 * u[i] * u[j] + (i == j ? c * c * k * u0 : 0.0));
            t(0, i + 1, j + 1) = t(i + 1, 0, j + 1) = t(i + 1, j + 1, 0) = v;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                t(i + 1, j + 1, l + 1) =
                    pre * (a6 * u[i] * u[j] * u[l] +
                           c * c * k * (u[i] * (j == l) + u[j] * (i == l) + u[l] * (i == j)));
    return t;
}

Tensor3 contract_boost(const Mat4& L, const Tensor3& t) {
    // one index at a time, 3 * 256 flops instead of 4096
    Tensor3 a, b, out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                double acc = 0.0;
                for (int m = 0; m < 4; ++m) acc += L(k, m) * t(i, j, m);
                a(i, j, k) = acc;
            }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                double acc = 0.0;
                for (int m = 0; m < 4; ++m) acc += L(j, m) * a(i, m, k);
                b(i, j, k) = acc;
            }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                double acc = 0.0;
                for (int m = 0; m < 4; ++m) acc += L(i, m) * b(m, j, k);
                out(i, j, k) = acc;
            }
    return out;
}

MomentSet quadrature_moments(const thermo::FluidState& s, double c, const QuadratureConfig& cfg) {
    const simd::JuttnerParams jp = thermo::juttner_params(s, c);
    const double R = thermo::momentum_radius(s.T, s.u.norm(), c);
    const MomentumGrid grid = ball_grid(Vec3::Zero(), R, cfg.n_radial, SphereQuadrature::product(cfg.n_mu, cfg.n_phi));
    const std::size_t N = grid.size();
    std::vector<double> f(N), p0(N);
    simd::juttner_batch(jp, grid.px.data(), grid.py.data(), grid.pz.data(), N, f.data(), p0.data());

    // accumulate only the 4 + 10 + 20 distinct entries
    double I[4] = {}, S2[4][4] = {}, S3[4][4][4] = {};
    for (std::size_t n = 0; n < N; ++n) {
        const double wt = grid.w[n] * f[n] / p0[n];
        if (wt == 0.0) continue;
        const double v[4] = {p0[n], grid.px[n], grid.py[n], grid.pz[n]};
        for (int i = 0; i < 4; ++i) {
            const double wi = wt * v[i];
            I[i] += wi;
            for (int j = i; j < 4; ++j) {
                const double wij = wi * v[j];
                S2[i][j] += wij;
                for (int k = j; k < 4; ++k) S3[i][j][k] += wij * v[k];
            }
        }
    }
    MomentSet m;
    for (int i = 0; i < 4; ++i) {
        m.I[i] = I[i];
        for (int j = 0; j < 4; ++j) {
            m.T2(i, j) = S2[std::min(i, j)][std::max(i, j)];
            for (int k = 0; k < 4; ++k) {
                int idx[3] = {i, j, k};
                std::sort(idx, idx + 3);
                m.T3(i, j, k) = S3[idx[0]][idx[1]][idx[2]];
            }
        }
    }
    return m;
}

double relative_gap(const Tensor3& a, const Tensor3& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) d = std::max(d, std::abs(a.a[i] - b.a[i]));
    return d / b.max_abs();
}

double relative_gap(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff(); }

}  // namespace rvmb::moments
