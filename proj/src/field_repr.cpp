#include "rvmb/field_repr.hpp"

#include <cmath>

namespace rvmb::field {

namespace {

// pieces shared by all six kernels
struct Geometry {
    Vec3 v;        // phat/c = p/p0
    Vec3 om_v;     // omega + v
    double D;      // 1 + v.omega
    double s;      // 1 - |v|^2 = c^2/p0^2
    double A;      // 1 + |p|^2/c^2
};

Geometry geometry(const Vec3& omega, const Vec3& p, double c) {
    Geometry g;
    const double p0 = energy(p, c), pn = p.norm();
    g.v = p / p0;
    g.s = (c / p0) * (c / p0);
    g.A = 1.0 / g.s;
    if (pn == 0.0) {
        g.D = 1.0;
        g.om_v = omega;
        return g;
    }
    const Vec3 e = p / pn;
    const double gap = c * c / (p0 * (p0 + pn));  // 1 - |v|
    // omega + v = (omega + e) - (1 - |v|) e and 1 + e.omega = |omega + e|^2/2
    g.om_v = (omega + e) - gap * e;
    g.D = gap + (pn / p0) * 0.5 * (omega + e).squaredNorm();
    return g;
}

double eps(int i, int j, int k) {
    return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

}  // namespace

double KernelSet::abs_sum() const {
    return aA.cwiseAbs().sum() + bA.cwiseAbs().sum() + cA.cwiseAbs().sum() + aB.cwiseAbs().sum() +
           bB.cwiseAbs().sum() + cB.cwiseAbs().sum();
}

double denominator(const Vec3& omega, const Vec3& p, double c) { return geometry(omega, p, c).D; }

double denominator_bound(const Vec3& p, double c, int m) {
    if (m < 0) throw DomainError("denominator_bound: m must be non-negative");
    const double p0 = energy(p, c);
    return std::pow(p0 * (p0 + p.norm()) / (c * c), m);
}

KernelSet kernels(const Vec3& omega, const Vec3& p, double c) {
    const Geometry g = geometry(omega, p, c);
    const double D = g.D, D2 = D * D, D3 = D2 * D, D4 = D2 * D2;
    const Vec3 w = omega.cross(g.v);
    KernelSet k;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double delta = i == j ? 1.0 : 0.0;
            // (e_j x v)_i
            double ejv = 0.0;
            for (int l = 0; l < 3; ++l) ejv += eps(i, j, l) * g.v[l];
            const double bracket_a = omega[j] * g.s + g.v[j] * D;
            const double bracket_b = -3.0 * omega[j] * g.s - 2.0 * g.v[j] * D;
            k.aA(i, j) = (3.0 * g.om_v[i] * bracket_a - D2 * delta) / (g.A * D4);
            k.bA(i, j) = -(g.om_v[i] * bracket_b + D2 * delta) / D3;
            k.cA(i, j) = g.om_v[i] * omega[j] / D2;
            k.aB(i, j) = (-3.0 * w[i] * bracket_a + D2 * ejv) / (g.A * D4);
            k.bB(i, j) = (w[i] * bracket_b + D2 * ejv) / D3;
            k.cB(i, j) = -w[i] * omega[j] / D2;
        }
    }
    return k;
}

std::array<double, 6> eval_kernels(const Vec3& omega, const Vec3& p, double c, int i, int j) {
    if (std::abs(omega.norm() - 1.0) > 1e-12) throw DomainError("eval_kernels: omega must be a unit vector");
    if (i < 0 || i > 2 || j < 0 || j > 2) throw DomainError("eval_kernels: index out of range");
    const KernelSet k = kernels(omega, p, c);
    return {k.aA(i, j), k.bA(i, j), k.cA(i, j), k.aB(i, j), k.bB(i, j), k.cB(i, j)};
}

NullCheck angular_null_check(const Vec3& p, double c, const AngularOptions& opt) {
    using V18 = Eigen::Matrix<double, 18, 1>;
    auto f = [&](const Vec3& om) {
        const KernelSet k = kernels(om, p, c);
        V18 out;
        out << Eigen::Map<const Eigen::Matrix<double, 9, 1>>(k.aA.data()),
            Eigen::Map<const Eigen::Matrix<double, 9, 1>>(k.aB.data());
        return out;
    };
    NullCheck r;
    const V18 v = sphere_integral(f, p, c, opt, &r.rule);
    r.aA = Eigen::Map<const Mat3>(v.data());
    r.aB = Eigen::Map<const Mat3>(v.data() + 9);
    return r;
}

ReferenceIntegrals reference_integrals(const Vec3& p, double c, const AngularOptions& opt) {
    const double p0 = energy(p, c);
    const Vec3 phat = c * p / p0;
    auto f = [&](const Vec3& om) {
        // sqrt(1+|p|^2/c^2) + p.omega/c = (p0/c) D
        const double base = (p0 / c) * denominator(om, p, c);
        Eigen::Vector4d out;
        out[0] = 1.0 / (base * base);
        out.tail<3>() = phat / (base * base * base);
        return out;
    };
    ReferenceIntegrals r;
    const Eigen::Vector4d v = sphere_integral(f, p, c, opt, &r.rule);
    r.I2 = v[0];
    r.I3 = v.tail<3>();
    r.I3_stated = 4.0 * M_PI * p;
    // with a = p0/c and b = |p|/c, the mu-integral of (a + b mu)^(-3) is 2a/(a^2-b^2)^2 = 2a
    r.I3_closed = 4.0 * M_PI * (p0 / c) * phat;
    return r;
}

GrowthReport kernel_growth(const std::vector<double>& p_norms, double c, const Vec3& direction) {
    GrowthReport rep;
    const Vec3 dir = direction.normalized();
    for (double pn : p_norms) {
        const Vec3 p = pn * dir;
        std::vector<Vec3> omegas = SphereQuadrature::clustered(-dir, pn / energy(p, c), 64, 8).nodes;
        omegas.push_back(-dir);
        omegas.push_back(dir);
        const double h = 1e-5 * (1.0 + pn);
        double best = 0.0;
        for (const Vec3& om : omegas) {
            const KernelSet k0 = kernels(om, p, c);
            double total = k0.abs_sum();
            // p-gradient of every entry by central differences, Euclidean norm per entry
            std::array<Eigen::Matrix<double, 54, 1>, 3> d;
            for (int l = 0; l < 3; ++l) {
                Vec3 pp = p, pm = p;
                pp[l] += h;
                pm[l] -= h;
                const KernelSet a = kernels(om, pp, c), b = kernels(om, pm, c);
                const Mat3* A[6] = {&a.aA, &a.bA, &a.cA, &a.aB, &a.bB, &a.cB};
                const Mat3* B[6] = {&b.aA, &b.bA, &b.cA, &b.aB, &b.bB, &b.cB};
                for (int m = 0; m < 6; ++m)
                    d[l].segment<9>(9 * m) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(((*A[m] - *B[m]) / (2 * h)).eval().data());
            }
            for (int e = 0; e < 54; ++e) total += std::sqrt(d[0][e] * d[0][e] + d[1][e] * d[1][e] + d[2][e] * d[2][e]);
            best = std::max(best, total);
        }
        rep.p_norm.push_back(pn);
        rep.value.push_back(best);
        rep.C = std::max(rep.C, best / std::pow(1.0 + pn, 8));
    }
    const std::size_t n = rep.p_norm.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const double x = std::log1p(rep.p_norm[k]), y = std::log(rep.value[k]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            if (k > 0)
                rep.max_local_slope = std::max(rep.max_local_slope, (y - std::log(rep.value[k - 1])) /
                                                                        (x - std::log1p(rep.p_norm[k - 1])));
        }
        rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return rep;
}

}  // namespace rvmb::field
