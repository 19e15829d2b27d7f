#pragma once

#include "rvmb/common.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rvmb {

struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre nodes on [a,b]. Tables are cached per n.
Rule1D gauss_legendre(int n, double a, double b);

// Composite GL: [a,b] cut into `panels` equal pieces with n nodes each.
Rule1D gauss_legendre_composite(int n, int panels, double a, double b);

struct AdaptiveResult {
    double value = 0.0;
    double abs_error = 0.0;
    int status = 0;  // 0 on success, otherwise the backend error code
};

// Adaptive 15-point Gauss-Kronrod on [a,b].
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol = 0.0, int max_intervals = 2000);

/// Nodes and weights on the unit sphere. Weights sum to 4*pi.
struct SphereQuadrature {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int degree = 0;  // polynomial exactness, 0 when not known
    std::string name;

    std::size_t size() const { return nodes.size(); }
    double weight_sum() const;

    // Lebedev rules of degree 5, 7, 11, 17, 27 or 41.
    static SphereQuadrature lebedev(int degree);

    // Gauss-Legendre in cos(theta) times uniform phi, polar axis e3.
    static SphereQuadrature product(int n_mu, int n_phi);

    // Product rule with polar axis `axis`. When split is set the mu-range is cut at 0,
    // so integrands with a kink on the equator |omega.axis| stay smooth per panel.
    static SphereQuadrature product_axis(const Vec3& axis, int n_mu, int n_phi, bool split = false);

    // Product rule clustered toward mu = 1 along `axis` for integrands carrying
    // powers of 1/(1 - beta*mu), beta in [0,1). Nodes are uniform-GL in log(1 - beta*mu).
    static SphereQuadrature clustered(const Vec3& axis, double beta, int n_mu, int n_phi);

    SphereQuadrature rotated(const Mat3& R) const;

    template <class F>
    auto integrate(F&& f) const {
        using R = decltype(f(nodes[0]));
        R acc = f(nodes[0]) * weights[0];
        for (std::size_t k = 1; k < nodes.size(); ++k) acc += f(nodes[k]) * weights[k];
        return acc;
    }
};

/// Flattened 3D momentum nodes: spherical shells around `center`.
struct MomentumGrid {
    std::vector<double> px, py, pz, w;
    std::size_t size() const { return w.size(); }
};

// radial GL with n_r nodes on [0,R] times the sphere rule
MomentumGrid ball_grid(const Vec3& center, double R, int n_r, const SphereQuadrature& sphere);

// Orthonormal frame whose third column is axis/|axis|.
Mat3 frame_from_axis(const Vec3& axis);

}  // namespace rvmb
