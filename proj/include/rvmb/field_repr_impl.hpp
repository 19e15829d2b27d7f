#pragma once

// template bodies for field_repr.hpp

#include <cmath>

namespace rvmb::field {

namespace detail {

inline double cluster_beta(const Vec3& p, double c) {
    const double pn = p.norm();
    return pn / energy(p, c);
}

inline Vec3 cluster_axis(const Vec3& p) {
    const double pn = p.norm();
    return pn > 0.0 ? Vec3(-p / pn) : Vec3(0, 0, 1);
}

template <class T>
double gap(const T& a, const T& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace detail

template <class F>
auto sphere_integral(F&& f, const Vec3& p, double c, const AngularOptions& opt, AngularRule* info) {
    const double beta = detail::cluster_beta(p, c);
    const Vec3 axis = detail::cluster_axis(p);
    int n_mu = opt.n_mu;
    auto product = [&](int n) { return SphereQuadrature::clustered(axis, beta, n, opt.n_phi); };
    AngularRule rule;
    auto finish = [&](auto value, const SphereQuadrature& q) {
        rule.name = q.name;
        rule.nodes = q.size();
        if (info) *info = rule;
        return value;
    };

    SphereQuadrature cur = product(n_mu);
    auto cur_val = cur.integrate(f);
    if (p.norm() <= opt.cluster_ratio * c) {
        const SphereQuadrature leb = SphereQuadrature::lebedev(opt.lebedev_degree);
        auto leb_val = leb.integrate(f);
        rule.cross_check_gap = detail::gap(leb_val, cur_val);
        if (rule.cross_check_gap <= opt.agree_tol) return finish(leb_val, leb);
    }
    for (int r = 0; r < opt.max_refine; ++r) {
        n_mu *= 2;
        SphereQuadrature next = product(n_mu);
        auto next_val = next.integrate(f);
        const double g = detail::gap(next_val, cur_val);
        rule.refinements = r + 1;
        cur = std::move(next);
        cur_val = next_val;
        if (g <= opt.agree_tol * 1e-2) break;
    }
    return finish(cur_val, cur);
}

}  // namespace rvmb::field
