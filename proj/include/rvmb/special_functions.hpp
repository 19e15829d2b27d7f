#pragma once

#include <vector>

namespace rvmb::special_functions {

struct BesselValue {
    double value = 0.0;
    double estimated_abs_error = 0.0;
};

struct BesselSeries {
    int j = 0;
    int n = 1;
    std::vector<double> coefficients;  // A_{j,0..n}
};

// A_{j,m} = prod_{k=1..m} (4j^2 - (2k-1)^2) / (m! 8^m), A_{j,0} = 1
double asymptotic_coefficient(int j, int m);
BesselSeries bessel_series(int j, int n);

// K_j(z) from the integral representation. Underflows to 0 for z > ~745.
BesselValue bessel_k(int j, double z);

// e^z K_j(z); never underflows
BesselValue bessel_k_scaled(int j, double z);

double log_bessel_k(int j, double z);

// sqrt(pi/2z) e^{-z} sum_{m<n} A_{j,m} z^{-m}, error field carries the remainder bound
BesselValue bessel_k_asymptotic(int j, double z, int n);
BesselValue bessel_k_asymptotic_scaled(int j, double z, int n);

// True when the tighter remainder bound |gamma_{j,n}| <= |A_{j,n}| is used.
bool asymptotic_tight_bound(int j, int n);

/// K3/K2 and its cancellation-free excesses at z.
struct RatioExpansion {
    double r = 1.0;      // K3/K2
    double rho = 0.0;    // r - 1
    double sigma = 0.0;  // r - 1 - 5/(2z)
    double q = 0.0;      // r^2 - 5r/z + 1/z^2 - 1
};

// Quadrature below z = 40, high-order asymptotic series above.
RatioExpansion bessel_ratio(double z);
RatioExpansion bessel_ratio_quadrature(double z);
RatioExpansion bessel_ratio_series(double z);

struct IdentityReport {
    double max_recurrence_rel = 0.0;   // K_{j+1} - (2j/z)K_j - K_{j-1}, j = 1,2
    double max_derivative_rel = 0.0;   // d/dz(K_j/z^j) + K_{j+1}/z^j by 5-point FD
    bool monotone = true;              // K_j < K_{j+1}
    double worst_recurrence_z = 0.0;
    double worst_derivative_z = 0.0;
};

IdentityReport bessel_identity_suite(const std::vector<double>& z_samples, double fd_step = 1e-3);

}  // namespace rvmb::special_functions
