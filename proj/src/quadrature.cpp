#include "rvmb/quadrature.hpp"

#include "rvmb/lebedev_data.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <map>
#include <memory>
#include <mutex>

namespace rvmb {

namespace {

struct GslInit {
    GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init;

// reference GL rule on [-1,1]
const Rule1D& gl_reference(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Rule1D>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto rule = std::make_unique<Rule1D>();
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
    rule->x.resize(n);
    rule->w.resize(n);
    for (int i = 0; i < n; ++i)
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule->x[i], &rule->w[i], t);
    gsl_integration_glfixed_table_free(t);
    // GSL is exact only for its tabulated n; elsewhere its nodes carry ~1e-9 errors.
    // A few Newton steps on P_n polish every node and the weights follow from P_n'.
    for (int i = 0; i < n; ++i) {
        double x = rule->x[i], dp = 1.0;
        for (int it = 0; it < 4; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            x -= p1 / dp;
        }
        rule->x[i] = x;
        rule->w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return *cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace

Rule1D gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre: n < 1");
    const Rule1D& ref = gl_reference(n);
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        r.x[i] = m + h * ref.x[i];
        r.w[i] = h * ref.w[i];
    }
    return r;
}

Rule1D gauss_legendre_composite(int n, int panels, double a, double b) {
    Rule1D r;
    const double d = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
        Rule1D p = gauss_legendre(n, a + k * d, a + (k + 1) * d);
        r.x.insert(r.x.end(), p.x.begin(), p.x.end());
        r.w.insert(r.w.end(), p.w.begin(), p.w.end());
    }
    return r;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol, int max_intervals) {
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(static_cast<size_t>(max_intervals));
    gsl_function F;
    F.function = [](double x, void* ctx) { return (*static_cast<const std::function<double(double)>*>(ctx))(x); };
    F.params = const_cast<std::function<double(double)>*>(&f);
    AdaptiveResult res;
    res.status = gsl_integration_qag(&F, a, b, abs_tol, rel_tol, static_cast<size_t>(max_intervals),
                                     GSL_INTEG_GAUSS15, ws, &res.value, &res.abs_error);
    gsl_integration_workspace_free(ws);
    return res;
}

double SphereQuadrature::weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

SphereQuadrature SphereQuadrature::lebedev(int degree) {
    const double* data = nullptr;
    std::size_t n = 0;
    switch (degree) {
        case 5: data = lebedev_data::kRule5.data(); n = lebedev_data::kN5; break;
        case 7: data = lebedev_data::kRule7.data(); n = lebedev_data::kN7; break;
        case 11: data = lebedev_data::kRule11.data(); n = lebedev_data::kN11; break;
        case 17: data = lebedev_data::kRule17.data(); n = lebedev_data::kN17; break;
        case 27: data = lebedev_data::kRule27.data(); n = lebedev_data::kN27; break;
        case 41: data = lebedev_data::kRule41.data(); n = lebedev_data::kN41; break;
        default: throw DomainError("lebedev: unsupported degree " + std::to_string(degree));
    }
    SphereQuadrature q;
    q.degree = degree;
    q.name = "lebedev" + std::to_string(degree);
    q.nodes.reserve(n);
    q.weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.nodes.emplace_back(data[4 * i], data[4 * i + 1], data[4 * i + 2]);
        q.weights.push_back(data[4 * i + 3]);
    }
    return q;
}

Mat3 frame_from_axis(const Vec3& axis) {
    Vec3 e3 = axis.normalized();
    Vec3 t = std::abs(e3[0]) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    Vec3 e1 = (t - e3 * e3.dot(t)).normalized();
    Vec3 e2 = e3.cross(e1);
    Mat3 R;
    R.col(0) = e1;
    R.col(1) = e2;
    R.col(2) = e3;
    return R;
}

namespace {

SphereQuadrature from_mu_rule(const Rule1D& mu, int n_phi, const Mat3& R, std::string name, int degree) {
    SphereQuadrature q;
    q.name = std::move(name);
    q.degree = degree;
    const double dphi = 2.0 * kPi / n_phi;
    for (std::size_t i = 0; i < mu.x.size(); ++i) {
        const double ct = mu.x[i], st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int k = 0; k < n_phi; ++k) {
            const double phi = (k + 0.5) * dphi;
            Vec3 local(st * std::cos(phi), st * std::sin(phi), ct);
            q.nodes.push_back(R * local);
            q.weights.push_back(mu.w[i] * dphi);
        }
    }
    return q;
}

}  // namespace

SphereQuadrature SphereQuadrature::product(int n_mu, int n_phi) {
    return from_mu_rule(gauss_legendre(n_mu, -1.0, 1.0), n_phi, Mat3::Identity(),
                        "product" + std::to_string(n_mu) + "x" + std::to_string(n_phi),
                        std::min(2 * n_mu - 1, n_phi - 1));
}

SphereQuadrature SphereQuadrature::product_axis(const Vec3& axis, int n_mu, int n_phi, bool split) {
    Rule1D mu;
    if (split) {
        Rule1D lo = gauss_legendre(n_mu, -1.0, 0.0), hi = gauss_legendre(n_mu, 0.0, 1.0);
        mu = lo;
        mu.x.insert(mu.x.end(), hi.x.begin(), hi.x.end());
        mu.w.insert(mu.w.end(), hi.w.begin(), hi.w.end());
    } else {
        mu = gauss_legendre(n_mu, -1.0, 1.0);
    }
    return from_mu_rule(mu, n_phi, frame_from_axis(axis), split ? "product-split" : "product-axis", 0);
}

SphereQuadrature SphereQuadrature::clustered(const Vec3& axis, double beta, int n_mu, int n_phi) {
    if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("clustered: beta outside [0,1)");
    if (beta < 1e-3) return product_axis(axis, n_mu, n_phi);
    // t = log(1 - beta*mu), mu = (1 - e^t)/beta, dmu = e^t/beta dt
    const double t_lo = std::log1p(-beta), t_hi = std::log1p(beta);
    Rule1D t = gauss_legendre(n_mu, t_lo, t_hi);
    Rule1D mu;
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        const double et = std::exp(t.x[i]);
        mu.x.push_back(-std::expm1(t.x[i]) / beta);
        mu.w.push_back(t.w[i] * et / beta);
    }
    return from_mu_rule(mu, n_phi, frame_from_axis(axis), "clustered", 0);
}

MomentumGrid ball_grid(const Vec3& center, double R, int n_r, const SphereQuadrature& sphere) {
    const Rule1D r = gauss_legendre(n_r, 0.0, R);
    MomentumGrid g;
    const std::size_t n = r.x.size() * sphere.size();
    g.px.reserve(n);
    g.py.reserve(n);
    g.pz.reserve(n);
    g.w.reserve(n);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double rr = r.x[i], wr = r.w[i] * rr * rr;
        for (std::size_t k = 0; k < sphere.size(); ++k) {
            const Vec3& o = sphere.nodes[k];
            g.px.push_back(center[0] + rr * o[0]);
            g.py.push_back(center[1] + rr * o[1]);
            g.pz.push_back(center[2] + rr * o[2]);
            g.w.push_back(wr * sphere.weights[k]);
        }
    }
    return g;
}

SphereQuadrature SphereQuadrature::rotated(const Mat3& R) const {
    SphereQuadrature q = *this;
    for (auto& n : q.nodes) n = R * n;
    q.name += "-rot";
    return q;
}

}  // namespace rvmb
