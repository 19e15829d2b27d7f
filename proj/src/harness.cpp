#include "rvmb/harness.hpp"

#include "rvmb/characteristics.hpp"
#include "rvmb/collision.hpp"
#include "rvmb/fluid.hpp"
#include "rvmb/macro_matrices.hpp"
#include "rvmb/moments.hpp"
#include "rvmb/special_functions.hpp"
#include "rvmb/thermo.hpp"
#include "rvmb/torus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace rvmb::harness {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// ---- config ----

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& where) {
    double out = 0.0;
    const char* end = v.data() + v.size();
    auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError(where + ": not a number: '" + v + "'");
    return out;
}

long long to_int(const std::string& v, const std::string& where) {
    long long out = 0;
    const char* end = v.data() + v.size();
    auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError(where + ": not an integer: '" + v + "'");
    return out;
}

std::vector<double> to_list(const std::string& v, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double(item, where));
    }
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    auto need = [](bool ok, const std::string& what) {
        if (!ok) throw ConfigError("invalid config: " + what);
    };
    need(grid_n >= 8 && grid_n % 2 == 0, "grid.n must be even and >= 8");
    need(length > 0.0, "domain.length must be positive");
    need(t_end > 0.0, "time.tmax must be positive");
    need(cfl > 0.0 && cfl <= 0.4, "time.cfl must lie in (0, 0.4]");
    need(c > 0.0, "physics.c must be positive");
    need(!c_list.empty(), "physics.c_list is empty");
    for (double v : c_list) need(v > 0.0, "physics.c_list entries must be positive");
    for (double v : eps_list) need(v > 0.0, "physics.eps_list entries must be positive");
    need(rho_bar > 0.0, "physics.rho_bar must be positive");
    need(std::abs(amp_n) < 1.0, "init.amp_n must be below 1");
    need(mode >= 1 && mode < grid_n / 2, "init.mode outside the resolved range");
    need(torus_n >= 8 && torus_n % 2 == 0, "torus.n must be even and >= 8");
    need(tol_slope > 0.0 && tol_gauss > 0.0 && tol_curl > 0.0, "tolerances must be positive");
    need(std::isfinite(entropy), "physics.entropy must be finite");
}

double ExperimentConfig::T_bar() const { return fluid::Polytrope::from_entropy(entropy).temperature(rho_bar); }

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
    ExperimentConfig cfg;
    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters{
        {"suite", [&](const std::string& v, const std::string&) { cfg.suite = v; }},
        {"grid.n", [&](const std::string& v, const std::string& w) { cfg.grid_n = static_cast<int>(to_int(v, w)); }},
        {"domain.length", [&](const std::string& v, const std::string& w) { cfg.length = to_double(v, w); }},
        {"time.tmax", [&](const std::string& v, const std::string& w) { cfg.t_end = to_double(v, w); }},
        {"time.cfl", [&](const std::string& v, const std::string& w) { cfg.cfl = to_double(v, w); }},
        {"physics.c", [&](const std::string& v, const std::string& w) { cfg.c = to_double(v, w); }},
        {"physics.c_list", [&](const std::string& v, const std::string& w) { cfg.c_list = to_list(v, w); }},
        {"physics.eps_list", [&](const std::string& v, const std::string& w) { cfg.eps_list = to_list(v, w); }},
        {"physics.entropy", [&](const std::string& v, const std::string& w) { cfg.entropy = to_double(v, w); }},
        {"physics.rho_bar", [&](const std::string& v, const std::string& w) { cfg.rho_bar = to_double(v, w); }},
        {"init.amp_n", [&](const std::string& v, const std::string& w) { cfg.amp_n = to_double(v, w); }},
        {"init.amp_u", [&](const std::string& v, const std::string& w) { cfg.amp_u = to_double(v, w); }},
        {"init.first_order", [&](const std::string& v, const std::string& w) { cfg.first_order = to_double(v, w); }},
        {"init.mode", [&](const std::string& v, const std::string& w) { cfg.mode = static_cast<int>(to_int(v, w)); }},
        {"torus.n", [&](const std::string& v, const std::string& w) { cfg.torus_n = static_cast<int>(to_int(v, w)); }},
        {"tol.slope", [&](const std::string& v, const std::string& w) { cfg.tol_slope = to_double(v, w); }},
        {"tol.gauss", [&](const std::string& v, const std::string& w) { cfg.tol_gauss = to_double(v, w); }},
        {"tol.curl", [&](const std::string& v, const std::string& w) { cfg.tol_curl = to_double(v, w); }},
        {"seed",
         [&](const std::string& v, const std::string& w) {
             const long long s = to_int(v, w);
             if (s < 0) throw ConfigError(w + ": seed must be non-negative");
             cfg.seed = static_cast<std::uint64_t>(s);
         }},
        {"output.csv", [&](const std::string& v, const std::string&) { cfg.csv = v; }},
        {"output.plot", [&](const std::string& v, const std::string&) { cfg.plot = v; }},
        {"output.report", [&](const std::string& v, const std::string&) { cfg.report = v; }},
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError(where + ": unknown key '" + key + "'");
        if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
        it->second(value, where);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    return parse_config(in, path);
}

// ---- report ----

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

void VerifyReport::write_csv(std::ostream& out) const {
    out << "check,value,tol,pass\n";
    for (const auto& c : checks)
        out << c.suite << '/' << c.name << ',' << format_double(c.value) << ',' << format_double(c.tol) << ','
            << (c.pass ? 1 : 0) << '\n';
}

void VerifyReport::write_table(std::ostream& out) const {
    std::size_t w = 5;
    for (const auto& c : checks) w = std::max(w, c.suite.size() + c.name.size() + 1);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-*s  %12s  %10s  %8s  %s\n", static_cast<int>(w), "check", "value", "tol",
                  "seconds", "result");
    out << buf;
    int failed = 0;
    for (const auto& c : checks) {
        const std::string name = c.suite + "/" + c.name;
        std::snprintf(buf, sizeof buf, "%-*s  %12.4e  %10.2e  %8.3f  %s\n", static_cast<int>(w), name.c_str(),
                      c.value, c.tol, c.seconds, c.pass ? "PASS" : "FAIL");
        out << buf;
        failed += !c.pass;
    }
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

// ---- suites ----

namespace {

using Clock = std::chrono::steady_clock;

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    // passes when the measured value is finite and <= tol; exceptions count as failures
    template <class F>
    void check(const std::string& name, double tol, F&& f) {
        VerifyCheck c;
        c.suite = name_;
        c.name = name;
        c.tol = tol;
        const auto t0 = Clock::now();
        try {
            c.value = f();
            c.pass = std::isfinite(c.value) && c.value <= tol;
        } catch (const std::exception&) {
            c.value = std::numeric_limits<double>::quiet_NaN();
            c.pass = false;
        }
        c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out_.push_back(c);
    }

    std::vector<VerifyCheck> take() { return std::move(out_); }

private:
    std::string name_;
    std::vector<VerifyCheck> out_;
};

Vec3 gaussian_vec(std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> N(0.0, 1.0);
    return scale * Vec3(N(rng), N(rng), N(rng));
}

Vec3 unit_vec(std::mt19937_64& rng) { return gaussian_vec(rng, 1.0).normalized(); }

void bessel_suite(Suite& s, const VerifyOptions&) {
    namespace sf = special_functions;
    std::vector<double> zs;
    for (double z = 0.5; z <= 500; z *= 1.7) zs.push_back(z);
    sf::IdentityReport id;
    s.check("recurrence", 1e-12, [&] {
        id = sf::bessel_identity_suite(zs);
        return id.max_recurrence_rel;
    });
    s.check("derivative", 1e-7, [&] { return id.max_derivative_rel; });
    s.check("monotone-violations", 0.5, [&] { return id.monotone ? 0.0 : 1.0; });
    // ratio of the observed remainder to its bound
    s.check("asymptotic-remainder", 1.0, [&] {
        double worst = 0.0;
        for (int j = 0; j <= 4; ++j)
            for (int n = 1; n <= 6; ++n)
                for (double z : {2.0, 5.0, 10.0, 30.0, 100.0}) {
                    if (z < 2 * j) continue;
                    const sf::BesselValue a = sf::bessel_k_asymptotic_scaled(j, z, n);
                    const double ref = sf::bessel_k_scaled(j, z).value;
                    worst = std::max(worst, std::abs(ref - a.value) / (a.estimated_abs_error + 1e-14 * ref));
                }
        return worst;
    });
    s.check("ratio-series-vs-quadrature", 1e-12, [&] {
        double worst = 0.0;
        for (double z : {40.0, 100.0, 300.0}) {
            const auto a = sf::bessel_ratio_quadrature(z), b = sf::bessel_ratio_series(z);
            worst = std::max(worst, std::abs(a.rho - b.rho) / b.rho);
        }
        return worst;
    });
}

void thermo_suite(Suite& s, const VerifyOptions& opt) {
    using thermo::FluidState;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> uT(0.5, 2.0), un(0.2, 3.0), uc(1.0, 100.0);
    s.check("energy-density-forms", 1e-12, [&] {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const FluidState r{un(rng), Vec3::Zero(), uT(rng)};
            const double c = uc(rng);
            const double a = thermo::energy_density(r, c), b = thermo::energy_density_k1(r, c);
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
        return worst;
    });
    s.check("isentropic-pressure-fd", 1e-5, [&] {
        const double c = 20.0, n = 1.0, h = 1e-4;
        auto P = [&](double nn) { return nn * thermo::solve_temperature(nn, {0.0}, c); };
        const double fd = (P(n * (1 + h)) - P(n * (1 - h))) / (2 * n * h);
        const double T = thermo::solve_temperature(n, {0.0}, c);
        return std::abs(fd - n * thermo::enthalpy_derivative(n, T, c));
    });
    s.check("temperature-roundtrip", 1e-8, [&] {
        double worst = 0.0;
        for (double c : {10.0, 50.0, 80.0})
            for (double T : {0.5, 1.0, 2.0}) {
                const double n = thermo::isentropic_density(T, {0.7}, c);
                worst = std::max(worst, std::abs(thermo::solve_temperature(n, {0.7}, c) - T) / T);
            }
        return worst;
    });
    s.check("newtonian-temperature-slope", 0.2, [&] {
        const std::vector<double> cs{10, 20, 40, 80};
        std::vector<double> err;
        const double T0 = thermo::newtonian_temperature(1.0, 0, {0.0}, 0);
        for (double c : cs) err.push_back(std::abs(thermo::solve_temperature(1.0, {0.0}, c) - T0));
        return std::abs(fluid::loglog_slope(cs, err) + 2.0);
    });
}

void moments_suite(Suite& s, const VerifyOptions& opt) {
    using thermo::FluidState;
    std::mt19937_64 rng(opt.seed + 1);
    std::uniform_real_distribution<double> uu(-1.0, 1.0), u01(0.0, 1.0);
    s.check("boost-g-orthogonality", 1e-12, [&] {
        const Eigen::Matrix4d g = Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
        double worst = 0.0;
        for (double c : {1.0, 10.0, 100.0})
            for (int k = 0; k < 20; ++k) {
                Vec3 u(uu(rng), uu(rng), uu(rng));
                u *= 0.5 * c * u01(rng) / u.norm();
                const moments::Mat4 L = moments::lorentz_boost(u, c);
                worst = std::max(worst, (L.transpose() * g * L - g).cwiseAbs().maxCoeff());
            }
        return worst;
    });
    double first = 0.0, second = 0.0, third = 0.0;
    s.check("closed-vs-quadrature-first", 1e-5, [&] {
        for (double c : {2.0, 10.0}) {
            Vec3 d(uu(rng), uu(rng), uu(rng));
            const FluidState st{0.5 + 1.5 * u01(rng), d.normalized() * 0.25 * c * u01(rng), 0.5 + 1.5 * u01(rng)};
            const moments::MomentSet q = moments::quadrature_moments(st, c, {120, 48, 96});
            const moments::FirstSecond m = moments::first_second_moments(st, c);
            first = std::max(first, (q.I - m.I).cwiseAbs().maxCoeff() / m.I.cwiseAbs().maxCoeff());
            second = std::max(second, moments::relative_gap(q.T2, m.T2));
            third = std::max(third, moments::relative_gap(q.T3, moments::boosted_third_moment(st, c)));
        }
        return first;
    });
    s.check("closed-vs-quadrature-second", 1e-5, [&] { return second; });
    s.check("closed-vs-quadrature-third", 1e-5, [&] { return third; });
}

void collision_suite(Suite& s, const VerifyOptions& opt) {
    using namespace collision;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::mt19937_64 rng(opt.seed + 2);
    double e_rel = 0.0, m_ulp = 0.0, s_rel = 0.0;
    s.check("energy-conservation", 1e-10, [&] {
        for (double c : {1.0, 10.0, 100.0})
            for (int k = 0; k < 2000; ++k) {
                const double scale = (k % 2) ? c : 3.0;
                const Vec3 p = gaussian_vec(rng, scale), q = gaussian_vec(rng, scale), w = unit_vec(rng);
                const double E = energy(p, c) + energy(q, c);
                const PostCM cm = post_cm(p, q, w, c);
                const PostGS gs = post_gs(p, q, w, c);
                e_rel = std::max({e_rel, std::abs(cm.p0 + cm.q0 - E) / E, std::abs(gs.p0 + gs.q0 - E) / E});
                const double mag = cm.p.norm() + cm.q.norm() + gs.p.norm() + gs.q.norm() + p.norm() + q.norm();
                m_ulp = std::max({m_ulp, ((cm.p + cm.q) - (p + q)).cwiseAbs().maxCoeff() / (eps * mag),
                                  ((gs.p + gs.q) - (p + q)).cwiseAbs().maxCoeff() / (eps * mag)});
                const Invariants inv = collision_invariants(p, q, c);
                s_rel = std::max(s_rel, std::abs(inv.s - inv.g * inv.g - 4 * c * c) / inv.s);
            }
        return e_rel;
    });
    s.check("momentum-conservation-ulps", 4.0, [&] { return m_ulp; });
    s.check("s-equals-g2-plus-4c2", 1e-12, [&] { return s_rel; });
    s.check("gs-jacobian", 1e-5, [&] {
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const double c = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 10.0 : 100.0);
            const Vec3 p = gaussian_vec(rng, 2.0), q = gaussian_vec(rng, 2.0), w = unit_vec(rng);
            worst = std::max(worst, jacobian_gs_check(p, q, w, c).rel_error());
        }
        return worst;
    });
    s.check("frame-equivalence", 1e-8, [&] {
        double worst = 0.0;
        for (int k = 0; k < 4; ++k) {
            const double c = (k % 2) ? 10.0 : 2.0;
            const Vec3 a = gaussian_vec(rng, 1.0), b = gaussian_vec(rng, 1.0), shift = gaussian_vec(rng, 0.5);
            const TestFunction G = [=](const Vec3& p, const Vec3& q, const Vec3& pp, const Vec3& qq) {
                return std::exp(-0.4 * (pp - shift).squaredNorm() - 0.5 * qq.squaredNorm()) * (1.0 + pp[0] * qq[1]) +
                       0.1 * std::sin(p.dot(q));
            };
            const FrameResult fr = frame_equivalence(G, a, b, c);
            if (!fr.converged) return std::numeric_limits<double>::infinity();
            worst = std::max(worst, fr.gap() / (1 + std::abs(fr.lhs)));
        }
        return worst;
    });
    s.check("maxwellian-annihilation", 1e-6, [&] {
        const double c = 10.0;
        const thermo::FluidState st{1.2, Vec3(0.3, -0.1, 0.2), 0.9};
        const simd::JuttnerParams jp = thermo::juttner_params(st, c);
        const Distribution M = [jp](const Vec3& v) {
            double o;
            simd::scalar::juttner_batch(jp, &v[0], &v[1], &v[2], 1, &o, nullptr);
            return o;
        };
        const Support sup{st.u, thermo::momentum_radius(st.T, st.u.norm(), c)};
        MomentumRule rule;
        rule.n_radial = 32;
        rule.sphere_degree = 17;
        const Vec3 p(1, 0.5, 0);
        const CollisionValue q = q_collision(M, M, p, c, sup, rule);
        return std::abs(q.value()) / (collision_frequency(st, p, c) * M(p));
    });
    s.check("frequency-regime-spread", 100.0, [&] {
        const double c = 100.0;
        const thermo::FluidState st{1.0, Vec3::Zero(), 1.0};
        double lo = 1e300, hi = 0.0;
        for (double r : {0.0, 3.0, 30.0, 100.0, 300.0, 3000.0}) {
            const double nu = collision_frequency(st, Vec3(r, 0, 0), c) / (r <= c ? 1 + r : c);
            lo = std::min(lo, nu);
            hi = std::max(hi, nu);
        }
        return hi / lo;
    });
}

void characteristics_suite(Suite& s, const VerifyOptions& opt) {
    using namespace characteristics;
    std::mt19937_64 rng(opt.seed + 3);
    s.check("zero-field-determinant", 1e-12, [&] {
        const double c = 3.0;
        const Vec3 p(1.0, 2.0, -0.5);
        const auto traj = variational_jacobian({Vec3(1, 1, 1), p, 0.4}, zero_fields(), 0.0, c);
        const auto& last = traj.back();
        const double dt = last.phase.t - 0.4, p0 = energy(p, c);
        const double central = std::pow(c, 5) * std::pow(std::abs(dt), 3) / std::pow(p0, 5);
        const double jac = (last.dX - free_streaming_jacobian(p, dt, c)).cwiseAbs().maxCoeff();
        return std::max(jac, std::abs(std::abs(last.dX.determinant()) - central) / central);
    });
    s.check("variational-vs-fd", 1e-6, [&] {
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        double worst = 0.0;
        for (int k = 0; k < 8; ++k) {
            const FieldSampler f = trig_fields(opt.seed * 100 + k, 1.0);
            const double c = (k % 2) ? 10.0 : 1.0;
            const PhaseState init{Vec3(U(rng), U(rng), U(rng)) * 2.0, Vec3(U(rng), U(rng), U(rng)) * 3.0, 0.5};
            const Integration in{512};
            const VariationalState v = variational_jacobian(init, f, 0.0, c, in).back();
            const FdJacobian fd = fd_jacobian(init, f, 0.0, c, 1e-5, in);
            worst = std::max({worst, (v.dX - fd.dX).cwiseAbs().maxCoeff(), (v.dP - fd.dP).cwiseAbs().maxCoeff()});
        }
        return worst;
    });
    BoundsReport br;
    s.check("jacobian-bound-C", 4.0, [&] {
        BoundsConfig cfg;
        cfg.samples = 12;
        cfg.horizon = 0.05;
        cfg.seed = opt.seed;
        br = jacobian_bounds_check(trig_fields(opt.seed, 1.0), 10.0, cfg);
        return br.C;
    });
    s.check("jacobian-perturbation", 0.25, [&] { return br.max_perturbation; });
}

void field_kernel_suite(Suite& s, const VerifyOptions& opt) {
    const KernelFn kern = opt.kernels ? opt.kernels : KernelFn(&field::kernels);
    std::mt19937_64 rng(opt.seed + 4);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<std::pair<Vec3, double>> samples{{Vec3::Zero(), 1.0}, {Vec3(2, 1, 0), 1.0}};
    for (int k = 0; k < 10; ++k) {
        const double c = std::pow(10.0, 2 * U(rng));
        samples.emplace_back(unit_vec(rng) * 10 * c * U(rng), c);
    }
    using V18 = Eigen::Matrix<double, 18, 1>;
    double worst_a = 0.0, worst_b = 0.0;
    s.check("angular-null-aA", 1e-8, [&] {
        for (const auto& [p, c] : samples) {
            auto f = [&, c = c, p = p](const Vec3& om) {
                const field::KernelSet k = kern(om, p, c);
                V18 out;
                out << Eigen::Map<const Eigen::Matrix<double, 9, 1>>(k.aA.data()),
                    Eigen::Map<const Eigen::Matrix<double, 9, 1>>(k.aB.data());
                return out;
            };
            const V18 v = field::sphere_integral(f, p, c, field::AngularOptions{});
            worst_a = std::max(worst_a, v.head<9>().cwiseAbs().maxCoeff());
            worst_b = std::max(worst_b, v.tail<9>().cwiseAbs().maxCoeff());
        }
        return worst_a;
    });
    s.check("angular-null-aB", 1e-8, [&] { return worst_b; });
    s.check("reference-integral", 1e-10, [&] {
        double worst = 0.0;
        for (const auto& [p, c] : samples) {
            const field::ReferenceIntegrals r = field::reference_integrals(p, c);
            worst = std::max({worst, std::abs(r.I2 - kFourPi) / kFourPi,
                              (r.I3 - r.I3_stated).norm() / (1 + r.I3_stated.norm())});
        }
        return worst;
    });
    s.check("kernel-growth-exponent", 8.0, [&] {
        std::vector<double> ps;
        for (double x = 1; x <= 64; x *= 2) ps.push_back(x);
        return field::kernel_growth(ps, 1.0).max_local_slope;
    });
}

void fluid_suite(Suite& s, const VerifyOptions& opt) {
    using namespace fluid;
    s.check("poisson-single-mode", 1e-12, [&] {
        const Grid1D g{128, 2 * kPi, true};
        Field rho(g.N);
        for (int i = 0; i < g.N; ++i) rho[i] = 1.0 + 0.3 * std::cos(2 * g.x(i));
        const PoissonResult r = poisson_solve(rho, 1.0, g);
        double err = 0.0;
        // phi'' = -4 pi 0.3 cos 2x gives phi = 0.3 pi cos 2x and E = phi' = -0.6 pi sin 2x
        for (int i = 0; i < g.N; ++i) err = std::max(err, std::abs(r.E[i] + 0.6 * kPi * std::sin(2 * g.x(i))));
        return err;
    });
    s.check("plasma-dispersion", 2e-2, [&] {
        return plasma_dispersion(1, Grid1D{128, 2 * kPi, true}, 1.0, entropy_for(1.0, 1.0), 1e-3, false).rel_error();
    });
    double drift = 0.0;
    s.check("rem-gauss-law", 1e-8, [&] {
        const Grid1D g{128, 2 * kPi, true};
        const double c = 10.0;
        REMSolver rem(g, c, entropy_for(1.0, 1.0), 0.1, 10.0);
        Field n(g.N), u(g.N);
        for (int i = 0; i < g.N; ++i) {
            n[i] = 1.0 + 0.1 * std::cos(g.x(i));
            u[i] = 0.1 * std::sin(g.x(i));
        }
        REMState st = rem.make_state(n, u);
        auto D_total = [&](const REMState& x) {
            double m = 0;
            for (int i = 0; i < g.N; ++i) m += x.n[i] * std::sqrt(1 + x.u[i] * x.u[i] / (c * c));
            return m;
        };
        const double m0 = D_total(st);
        double worst = rem.gauss_residual(st);
        for (int k = 0; k < 200; ++k) {
            rem.step(st, 0.9 * rem.max_dt(st));
            worst = std::max(worst, rem.gauss_residual(st));
        }
        drift = std::abs(D_total(st) - m0) / m0;
        return worst;
    });
    s.check("rem-mass-drift", 1e-12, [&] { return drift; });
    Torus3D T(Grid3DPeriodic{32});
    const Grid3DPeriodic& g3 = T.grid();
    s.check("curl-div-residual", 1e-8, [&] {
        const Field n0 = sample(g3, [](double x, double, double) { return 1.0 + 0.1 * std::cos(x); });
        const VecField u0 = T.gradient(
            sample(g3, [](double x, double y, double z) { return std::sin(x) * std::sin(y) * std::sin(z); }));
        const CurlDivResult r = curl_div_solve(T, n0, u0, ep_dtE0(T, n0, u0));
        return std::max(r.curl_residual, r.div_B);
    });
    std::vector<double> cs{10, 20, 40, 80}, norms;
    double gauss = 0.0;
    s.check("remainder-gauss", 1e-8, [&] {
        const ExpansionTier tier = manufactured_tier(T);
        for (double c : cs) {
            const Remainder r = remainder_residuals(T, tier, c);
            gauss = std::max(gauss, r.gauss);
            norms.push_back(r.norm);
        }
        return gauss;
    });
    s.check("remainder-slope", 0.1, [&] { return std::abs(loglog_slope(cs, norms) + 1.0); });
    s.check("macro-non-positive-states", 0.5, [&] {
        std::mt19937_64 rng(opt.seed + 5);
        std::uniform_real_distribution<double> U(0, 1);
        const double c = 50.0;
        int bad = 0;
        for (int k = 0; k < 100; ++k) {
            const Vec3 d(U(rng) - 0.5, U(rng) - 0.5, U(rng) - 0.5);
            const thermo::FluidState st{0.5 + 1.5 * U(rng), d.normalized() * 0.25 * c * U(rng), 0.5 + 1.5 * U(rng)};
            bad += !positive_definiteness_check(assemble_macro_matrices(st, c).A0).positive;
        }
        return static_cast<double>(bad);
    });
}

using SuiteFn = void (*)(Suite&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"bessel", bessel_suite},
        {"thermo", thermo_suite},
        {"moments", moments_suite},
        {"collision", collision_suite},
        {"characteristics", characteristics_suite},
        {"field-kernels", field_kernel_suite},
        {"fluid", fluid_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, f] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RVMB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

VerifyReport run_verify(const std::vector<std::string>& suites, const VerifyOptions& opt) {
    std::vector<SuiteFn> fns;
    for (const auto& name : suites) {
        auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
        if (it == registry().end()) throw UsageError("unknown suite '" + name + "'");
        fns.push_back(it->second);
    }
    std::vector<std::vector<VerifyCheck>> results(fns.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < fns.size();) {
            Suite s(suites[i]);
            fns[i](s, opt);
            results[i] = s.take();
        }
    };
    const int n = std::min<int>(thread_count(opt.threads), static_cast<int>(fns.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    VerifyReport rep;
    for (auto& r : results) rep.checks.insert(rep.checks.end(), r.begin(), r.end());
    return rep;
}

// ---- sweep ----

SweepResult run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    fluid::NewtonianConfig nc;
    nc.grid = fluid::Grid1D{cfg.grid_n, cfg.length, true};
    nc.t_end = cfg.t_end;
    nc.rho_bar = cfg.rho_bar;
    nc.T_bar = cfg.T_bar();
    nc.amp_n = cfg.amp_n;
    nc.amp_u = cfg.amp_u;
    nc.first_order = cfg.first_order;
    nc.cfl = cfg.cfl;
    SweepResult out;
    std::vector<double> cs, errs;
    for (double c : cfg.c_list) {
        fluid::NewtonianRow r;
        try {
            r = fluid::newtonian_run(c, nc);
        } catch (const std::exception& e) {
            throw SolverError("sweep failed at c = " + format_double(c) + ": " + e.what());
        }
        out.rows.push_back({c, 0.0, r.error, r.error_first, r.gauss_residual, r.steps});
        cs.push_back(c);
        errs.push_back(r.error);
    }
    if (cs.size() >= 2) {
        out.has_slope = true;
        out.slope = fluid::loglog_slope(cs, errs);
    }
    return out;
}

void SweepResult::write_csv(std::ostream& out) const {
    out << "c,eps,error,error_first,gauss_residual,steps,slope\n";
    for (const auto& r : rows)
        out << format_double(r.c) << ",," << format_double(r.error) << ',' << format_double(r.error_first) << ','
            << format_double(r.gauss_residual) << ',' << r.steps << ',' << (has_slope ? format_double(slope) : "")
            << '\n';
}

void SweepResult::write_plot(std::ostream& out) const {
    out << "# c error error_first\n";
    for (const auto& r : rows)
        out << format_double(r.c) << ' ' << format_double(r.error) << ' ' << format_double(r.error_first) << '\n';
}

}  // namespace rvmb::harness
