#include "rvmb/macro_matrices.hpp"
#include "rvmb/special_functions.hpp"

#include <cmath>

namespace rvmb::fluid {

MacroMatrixSet assemble_macro_matrices(const thermo::FluidState& s, double c, bool admissible) {
    s.validate();
    if (!(c > 0.0)) throw DomainError("assemble_macro_matrices: c must be positive");
    const Vec3& u = s.u;
    if (admissible && u.norm() > 0.25 * c) throw DomainError("assemble_macro_matrices: |u| > c/4");
    const double n = s.n, T = s.T;
    const double g = thermo::gamma_of(T, c);
    const double r = special_functions::bessel_ratio(g).r;
    const double h = c * c * r, P = n * T, e = n * h - P;
    const double u0 = s.u0(c), uu = u.squaredNorm();
    const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2;

    MacroMatrixSet m;
    m.h1 = n * (6.0 * r / g + 1.0);
    m.h2 = n * r / g;
    const double h1 = m.h1, h2 = m.h2;
    const Eigen::Matrix3d I3 = Eigen::Matrix3d::Identity();

    Mat5& A0 = m.A0;
    A0.setZero();
    A0(0, 0) = n * u0 / c;
    A0.block<1, 3>(0, 1) = (n * u0 * h / c3) * u.transpose();
    A0(0, 4) = (e * u0 * u0 + P * uu) / c4;
    A0.block<3, 1>(1, 0) = (n * u0 * h / c3) * u;
    A0.block<3, 3>(1, 1) = (h1 / c * (u * u.transpose()) + c * h2 * I3) * u0;
    A0.block<3, 1>(1, 4) = (h1 / c2 * u0 * u0 - h2) * u;
    A0(4, 0) = A0(0, 4);
    A0.block<1, 3>(4, 1) = (h1 / c2 * u0 * u0 - h2) * u.transpose();
    A0(4, 4) = (h1 / c3 * u0 * u0 - 3.0 * h2 / c) * u0;
    m.asymmetry = (A0 - A0.transpose()).cwiseAbs().maxCoeff();
    A0.triangularView<Eigen::StrictlyLower>() = A0.transpose();

    for (int i = 0; i < 3; ++i) {
        const double ui = u(i);
        const Vec3 ei = Vec3::Unit(i);
        Eigen::Matrix3d At;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) At(j, k) = (i == j ? u(k) : 0.0) + (i == k ? u(j) : 0.0);
        Mat5& A = m.A[i];
        A.setZero();
        A(0, 0) = n * ui;
        A.block<1, 3>(0, 1) = (n * h * ui / c2) * u.transpose() + P * ei.transpose();
        A(0, 4) = n * h * u0 * ui / c3;
        A.block<3, 1>(1, 0) = (n * h * ui / c2) * u + P * ei;
        A.block<3, 3>(1, 1) = h1 * ui * (u * u.transpose()) + c2 * h2 * (ui * I3 + At);
        A.block<3, 1>(1, 4) = (h1 / c * ui * u + c * h2 * ei) * u0;
        A(4, 0) = A(0, 4);
        A.block<1, 3>(4, 1) = ((h1 / c * ui * u + c * h2 * ei) * u0).transpose();
        A(4, 4) = (h1 / c2 * u0 * u0 - h2) * ui;
        m.asymmetry = std::max(m.asymmetry, (A - A.transpose()).cwiseAbs().maxCoeff());
        A.triangularView<Eigen::StrictlyLower>() = A.transpose();
    }
    return m;
}

Mat4 remainder_symmetrizer(double n, double T, const Vec3& u, double c) {
    if (!(n > 0.0 && T > 0.0 && c > 0.0)) throw DomainError("remainder_symmetrizer: n, T, c must be positive");
    const double hp = thermo::enthalpy_derivative(n, T, c);
    const double h = thermo::enthalpy(thermo::FluidState{n, u, T}, c);
    const double u02 = c * c + u.squaredNorm();
    Mat4 A;
    A(0, 0) = hp;
    A.block<1, 3>(0, 1) = (hp * n / u02) * u.transpose();
    A.block<3, 1>(1, 0) = (hp * n / u02) * u;
    A.block<3, 3>(1, 1) = (h * n / (c * c)) * (Eigen::Matrix3d::Identity() - u * u.transpose() / u02);
    return A;
}

Definiteness positive_definiteness_check(const Eigen::MatrixXd& A, double tol) {
    if (A.rows() != A.cols() || A.rows() == 0) throw DomainError("positive_definiteness_check: not square");
    const int n = static_cast<int>(A.rows());
    Definiteness r;
    const double scale = A.cwiseAbs().maxCoeff();
    r.asymmetry = (A - A.transpose()).cwiseAbs().maxCoeff();
    if (r.asymmetry > tol * scale) throw DomainError("positive_definiteness_check: matrix is not symmetric");

    // A = L D L^T with unit lower L; k-th leading minor = d_0 ... d_{k-1}
    Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n);
    std::vector<double> d(n, 0.0);
    double prod = 1.0;
    int k = 0;
    for (; k < n; ++k) {
        double dk = A(k, k);
        for (int j = 0; j < k; ++j) dk -= L(k, j) * L(k, j) * d[j];
        d[k] = dk;
        r.pivots.push_back(dk);
        prod *= dk;
        r.minors.push_back(prod);
        if (dk == 0.0) break;
        for (int i = k + 1; i < n; ++i) {
            double v = A(i, k);
            for (int j = 0; j < k; ++j) v -= L(i, j) * L(k, j) * d[j];
            L(i, k) = v / dk;
        }
    }
    for (int m = k + 1; m < n; ++m) r.minors.push_back(A.topLeftCorner(m + 1, m + 1).partialPivLu().determinant());
    r.positive = true;
    for (double v : r.minors) r.positive = r.positive && v > 0.0;
    return r;
}

}  // namespace rvmb::fluid
