#include "rvmb/special_functions.hpp"

#include "rvmb/common.hpp"
#include "rvmb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rvmb::special_functions {

namespace {

constexpr double kAsymptoticSwitch = 700.0;
constexpr double kRatioSeriesSwitch = 40.0;
constexpr double kVmax = 14.0;  // e^{-196} kills the tail for every order we use

void check_domain(int j, double z) {
    if (j < 0) throw DomainError("bessel: negative order");
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("bessel: z must be positive and finite");
}

// e^z K_j(z) = sqrt(pi) 2^{1-j} z^{-1/2} / Gamma(j+1/2) * int_0^inf v^{2j} e^{-v^2} (2 + v^2/z)^{j-1/2} dv
// from t = 1 + s/z, s = v^2 in the defining integral
BesselValue scaled_by_quadrature(int j, double z) {
    const double a = j - 0.5;
    auto f = [j, z, a](double v) {
        const double v2 = v * v;
        return std::pow(v, 2 * j) * std::exp(-v2) * std::pow(2.0 + v2 / z, a);
    };
    // the integrand peaks near v ~ sqrt(j) for z large and v ~ sqrt(2j) for z small,
    // splitting at the scale sqrt(z) helps the small-z regime where (2 + v^2/z) turns over
    double acc = 0.0, err = 0.0;
    const double cuts[] = {0.0, std::min(std::sqrt(2.0 * z), 1.0), 2.0, 4.0, 7.0, kVmax};
    for (int k = 0; k + 1 < 6; ++k) {
        if (cuts[k + 1] <= cuts[k]) continue;
        AdaptiveResult r = integrate_adaptive(f, cuts[k], cuts[k + 1], 2e-14, 0.0);
        acc += r.value;
        err += r.abs_error;
    }
    const double pref = std::sqrt(kPi) * std::pow(2.0, 1.0 - j) / (std::sqrt(z) * std::tgamma(j + 0.5));
    BesselValue out;
    out.value = pref * acc;
    out.estimated_abs_error = pref * err + 8.0 * std::numeric_limits<double>::epsilon() * out.value;
    return out;
}

}  // namespace

double asymptotic_coefficient(int j, int m) {
    if (m < 0) throw DomainError("asymptotic_coefficient: m < 0");
    double a = 1.0;
    const double mu = 4.0 * j * j;
    for (int k = 1; k <= m; ++k) a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k);
    return a;
}

BesselSeries bessel_series(int j, int n) {
    if (j < 0 || n < 1) throw DomainError("bessel_series: j >= 0 and n >= 1 required");
    BesselSeries s;
    s.j = j;
    s.n = n;
    for (int m = 0; m <= n; ++m) s.coefficients.push_back(asymptotic_coefficient(j, m));
    return s;
}

bool asymptotic_tight_bound(int j, int n) {
    // j <= n + 1/2; orders are integers so the half-integer boundary never occurs
    return 2 * j <= 2 * n + 1;
}

BesselValue bessel_k_asymptotic_scaled(int j, double z, int n) {
    check_domain(j, z);
    if (n < 1) throw DomainError("bessel_k_asymptotic: n < 1");
    double sum = 0.0, zp = 1.0, a = 1.0;
    const double mu = 4.0 * j * j;
    for (int m = 0; m < n; ++m) {
        sum += a * zp;
        a *= (mu - (2.0 * m + 1) * (2.0 * m + 1)) / (8.0 * (m + 1));
        zp /= z;
    }
    // a = A_{j,n}, zp = z^{-n}
    const double pref = std::sqrt(kPi / (2.0 * z));
    double bound = std::abs(a) * zp;
    if (!asymptotic_tight_bound(j, n)) bound *= 2.0 * std::exp((j * j - 0.25) / z);
    return {pref * sum, pref * bound};
}

BesselValue bessel_k_asymptotic(int j, double z, int n) {
    BesselValue s = bessel_k_asymptotic_scaled(j, z, n);
    const double e = std::exp(-z);
    return {s.value * e, s.estimated_abs_error * e};
}

BesselValue bessel_k_scaled(int j, double z) {
    check_domain(j, z);
    if (z > kAsymptoticSwitch) return bessel_k_asymptotic_scaled(j, z, 5);
    return scaled_by_quadrature(j, z);
}

BesselValue bessel_k(int j, double z) {
    BesselValue s = bessel_k_scaled(j, z);
    const double e = std::exp(-z);
    return {s.value * e, s.estimated_abs_error * e};
}

double log_bessel_k(int j, double z) { return std::log(bessel_k_scaled(j, z).value) - z; }

RatioExpansion bessel_ratio_quadrature(double z) {
    check_domain(2, z);
    RatioExpansion e;
    const double k2 = scaled_by_quadrature(2, z).value;
    const double k3 = scaled_by_quadrature(3, z).value;
    e.r = k3 / k2;
    e.rho = (k3 - k2) / k2;
    e.sigma = e.rho - 2.5 / z;
    e.q = 2.0 * e.sigma + e.rho * e.rho - 5.0 * e.rho / z + 1.0 / (z * z);
    return e;
}

RatioExpansion bessel_ratio_series(double z) {
    check_domain(2, z);
    // S2 = sum A_{2,m} x^m, D = S3 - S2, E = D - (5/2) x S2; all differences taken per coefficient
    const double x = 1.0 / z;
    double a2 = 1.0, a3 = 1.0, a2_prev = 1.0;
    double s2 = 1.0, d = 0.0, e = 0.0, xp = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 40; ++m) {
        a2_prev = a2;
        a2 *= (16.0 - (2.0 * m - 1) * (2.0 * m - 1)) / (8.0 * m);
        a3 *= (36.0 - (2.0 * m - 1) * (2.0 * m - 1)) / (8.0 * m);
        xp *= x;
        const double dm = (a3 - a2) * xp;
        const double em = (m == 1) ? 0.0 : dm - 2.5 * a2_prev * xp;
        const double size = std::abs(dm);
        if (size > last) break;  // asymptotic series started to diverge
        last = size;
        s2 += a2 * xp;
        d += dm;
        e += em;
        if (size < 1e-20 * std::abs(d)) break;
    }
    RatioExpansion r;
    r.rho = d / s2;
    r.r = 1.0 + r.rho;
    r.sigma = e / s2;
    r.q = 2.0 * r.sigma + r.rho * r.rho - 5.0 * r.rho * x + x * x;
    return r;
}

RatioExpansion bessel_ratio(double z) {
    return z < kRatioSeriesSwitch ? bessel_ratio_quadrature(z) : bessel_ratio_series(z);
}

IdentityReport bessel_identity_suite(const std::vector<double>& z_samples, double fd_step) {
    IdentityReport rep;
    for (double z : z_samples) {
        check_domain(0, z);
        double k[6];
        for (int j = 0; j < 6; ++j) k[j] = bessel_k_scaled(j, z).value;
        for (int j = 1; j <= 2; ++j) {
            const double res = std::abs(k[j + 1] - (2.0 * j / z) * k[j] - k[j - 1]) / k[j + 1];
            if (res > rep.max_recurrence_rel) {
                rep.max_recurrence_rel = res;
                rep.worst_recurrence_z = z;
            }
        }
        // scaled values share the factor e^z, so the ordering carries over
        for (int j = 0; j < 5; ++j)
            if (!(k[j] < k[j + 1])) rep.monotone = false;
        const double h = std::min(fd_step, 0.25 * z);
        for (int j = 0; j <= 3; ++j) {
            // g(z0 + s) = e^{z0} K_j(z0+s)/(z0+s)^j, so g' = e^{z0} d/dz(K_j/z^j)
            auto g = [&](double s) {
                const double zz = z + s;
                return std::exp(-s) * bessel_k_scaled(j, zz).value / std::pow(zz, j);
            };
            const double d = (g(-2 * h) - 8 * g(-h) + 8 * g(h) - g(2 * h)) / (12 * h);
            const double target = -k[j + 1] / std::pow(z, j);
            const double res = std::abs(d - target) / std::abs(target);
            if (res > rep.max_derivative_rel) {
                rep.max_derivative_rel = res;
                rep.worst_derivative_z = z;
            }
        }
    }
    return rep;
}

}  // namespace rvmb::special_functions
