#pragma once

#include "rvmb/common.hpp"
#include "rvmb/thermo.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace rvmb::fluid {

using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat4 = Eigen::Matrix<double, 4, 4>;

/// Symmetriser of the macroscopic system in the unknowns (n, u, energy).
struct MacroMatrixSet {
    Mat5 A0;
    std::array<Mat5, 3> A;
    double h1 = 0.0, h2 = 0.0;
    double asymmetry = 0.0;  // max |M - M^T| of the entries as displayed; the stored matrices mirror the upper triangle
};

// The electromagnetic background enters only the zeroth-order matrices, so it is not an argument here.
// admissible = true enforces |u| <= c/4.
MacroMatrixSet assemble_macro_matrices(const thermo::FluidState& s, double c, bool admissible = true);

/// 4x4 symmetriser of the remainder system in (N, U): h', h' n u/(u0)^2, (h n/c^2)(I - u u^T/(u0)^2).
Mat4 remainder_symmetrizer(double n, double T, const Vec3& u, double c);

struct Definiteness {
    bool positive = false;
    std::vector<double> minors;  // leading principal minors, 1x1 first
    std::vector<double> pivots;
    double asymmetry = 0.0;
};

// Leading minors from an unpivoted LDL^T; a zero pivot finishes the remaining minors by LU.
// Throws DomainError when max |A - A^T| > tol * max |A|.
Definiteness positive_definiteness_check(const Eigen::MatrixXd& A, double tol = 1e-12);

}  // namespace rvmb::fluid
