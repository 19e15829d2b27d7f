// rvmb: command-line front end for the verification suites and the fluid experiments.

#include "rvmb/collision.hpp"
#include "rvmb/fluid.hpp"
#include "rvmb/harness.hpp"
#include "rvmb/torus.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rvmb;
using harness::format_double;

namespace {

// "-" means stdout
template <class Writer>
void emit(const std::string& path, Writer&& w) {
    if (path == "-") {
        w(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    w(out);
    if (!out) throw ConfigError("write failed: " + path);
}

harness::ExperimentConfig config_from(const std::string& path) {
    return path.empty() ? harness::ExperimentConfig{} : harness::load_config(path);
}

std::vector<double> parse_list(const std::string& s) {
    std::istringstream in("physics.c_list = " + s);
    return harness::parse_config(in, "--c-list").c_list;
}

int cmd_verify(const std::vector<std::string>& suites_in, const harness::ExperimentConfig& cfg, std::string report_path,
               int threads) {
    const std::vector<std::string> suites = suites_in.empty() ? harness::known_suites() : suites_in;
    if (report_path.empty()) report_path = cfg.report;
    harness::VerifyOptions opt;
    opt.threads = threads;
    opt.seed = cfg.seed;
    const harness::VerifyReport rep = harness::run_verify(suites, opt);
    rep.write_table(std::cout);
    emit(report_path, [&](std::ostream& o) { rep.write_csv(o); });
    return rep.pass() ? 0 : 1;
}

int cmd_sweep(harness::ExperimentConfig cfg, const std::string& c_list, const std::string& out) {
    if (!c_list.empty()) cfg.c_list = parse_list(c_list);
    if (!out.empty()) cfg.csv = out;
    const harness::SweepResult r = harness::run_sweep(cfg);
    emit(cfg.csv, [&](std::ostream& o) { r.write_csv(o); });
    if (!cfg.plot.empty()) emit(cfg.plot, [&](std::ostream& o) { r.write_plot(o); });
    if (cfg.csv != "-") r.write_csv(std::cout);
    bool pass = true;
    double gauss = 0.0;
    for (const auto& row : r.rows) gauss = std::max(gauss, row.gauss_residual);
    if (gauss > cfg.tol_gauss) pass = false;
    std::cerr << cfg.suite << ": max gauss residual " << format_double(gauss);
    if (r.has_slope) {
        // the rEM - EP gap closes like 1/c
        pass = pass && std::abs(r.slope + 1.0) <= cfg.tol_slope;
        std::cerr << ", slope " << format_double(r.slope);
    }
    std::cerr << (pass ? " PASS\n" : " FAIL\n");
    return pass ? 0 : 1;
}

int cmd_solve(const std::string& model, const harness::ExperimentConfig& cfg, const std::string& out) {
    const fluid::Grid1D g{cfg.grid_n, cfg.length, true};
    const fluid::Polytrope eos = fluid::Polytrope::from_entropy(cfg.entropy);
    const double k = 2.0 * kPi / g.L;
    auto rho0 = [&](double x) { return cfg.rho_bar * (1.0 + cfg.amp_n * std::cos(k * x)); };
    auto u0 = [&](double x) { return cfg.amp_u * std::sin(k * x); };
    const double shrink = cfg.cfl / fluid::StepControl{}.cfl;
    const std::string path = out.empty() ? cfg.csv : out;
    if (model == "ep") {
        fluid::EPSolver ep(g, eos);
        fluid::EPState s = fluid::make_ep_state(g, cfg.rho_bar, rho0, u0);
        while (s.t < cfg.t_end * (1.0 - 1e-12)) ep.step(s, std::min(shrink * ep.max_dt(s), cfg.t_end - s.t));
        emit(path, [&](std::ostream& o) {
            o << "x,n,u,E\n";
            for (int i = 0; i < g.N; ++i)
                o << format_double(g.x(i)) << ',' << format_double(s.rho[i]) << ',' << format_double(s.u[i]) << ','
                  << format_double(s.E[i]) << '\n';
        });
        return 0;
    }
    const double T_bar = cfg.T_bar();
    fluid::REMSolver rem(g, cfg.c, cfg.entropy, T_bar / 10.0, T_bar * 10.0);
    fluid::Field n(g.N), u(g.N);
    for (int i = 0; i < g.N; ++i) {
        n[i] = rho0(g.x(i));
        u[i] = u0(g.x(i));
    }
    fluid::REMState s = rem.make_state(n, u);
    while (s.t < cfg.t_end * (1.0 - 1e-12)) rem.step(s, std::min(shrink * rem.max_dt(s), cfg.t_end - s.t));
    emit(path, [&](std::ostream& o) {
        o << "x,n,u,E,T\n";
        for (int i = 0; i < g.N; ++i)
            o << format_double(g.x(i)) << ',' << format_double(s.n[i]) << ',' << format_double(s.u[i]) << ','
              << format_double(s.E[i]) << ',' << format_double(s.T[i]) << '\n';
    });
    const double gauss = rem.gauss_residual(s);
    std::cerr << "gauss residual " << format_double(gauss) << '\n';
    return gauss <= cfg.tol_gauss ? 0 : 1;
}

int cmd_curl_div(const harness::ExperimentConfig& cfg, const std::string& out) {
    fluid::Torus3D T(fluid::Grid3DPeriodic{cfg.torus_n});
    const fluid::ExpansionTier tier = fluid::manufactured_tier(T, cfg.rho_bar, cfg.entropy);
    const fluid::CurlDivResult r = fluid::curl_div_solve(T, tier.n0, tier.u0, fluid::ep_dtE0(T, tier.n0, tier.u0));
    const fluid::ForcingReport fr = fluid::forcing_decomposition_check(T, tier.n0, tier.u0, cfg.rho_bar, 10, cfg.seed);
    const bool pass = r.div_B <= cfg.tol_curl && r.curl_residual <= cfg.tol_curl && fr.max_pairing <= cfg.tol_curl;
    emit(out.empty() ? cfg.csv : out, [&](std::ostream& o) {
        o << "quantity,value\n";
        o << "div_B," << format_double(r.div_B) << '\n';
        o << "curl_residual," << format_double(r.curl_residual) << '\n';
        o << "f_divergence," << format_double(r.f_divergence) << '\n';
        o << "sup_B," << format_double(fluid::sup_norm(r.B)) << '\n';
        o << "decomposition_residual," << format_double(fr.decomposition_residual) << '\n';
        o << "max_gradient_pairing," << format_double(fr.max_pairing) << '\n';
    });
    return pass ? 0 : 1;
}

int cmd_collision_table(const harness::ExperimentConfig& cfg, const std::string& c_list, const std::string& out) {
    const std::vector<double> cs = c_list.empty() ? cfg.c_list : parse_list(c_list);
    const thermo::FluidState st{cfg.rho_bar, Vec3::Zero(), cfg.T_bar()};
    emit(out.empty() ? cfg.csv : out, [&](std::ostream& o) {
        o << "c,p,nu,nu_over_scale\n";
        for (double c : cs)
            for (double f : {0.0, 0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0}) {
                const double p = f * c;
                const double nu = collision::collision_frequency(st, Vec3(p, 0, 0), c);
                // 1 + |p| below the crossover, c above it
                const double scale = p <= c ? 1.0 + p : c;
                o << format_double(c) << ',' << format_double(p) << ',' << format_double(nu) << ','
                  << format_double(nu / scale) << '\n';
            }
    });
    return 0;
}

int cmd_dispersion(const harness::ExperimentConfig& cfg, const std::string& out) {
    const fluid::Grid1D g{cfg.grid_n, cfg.length, true};
    emit(out.empty() ? cfg.csv : out, [&](std::ostream& o) {
        o << "mode,k,linear,omega_measured,omega_theory,rel_error\n";
        for (bool linear : {true, false}) {
            const fluid::Dispersion d = fluid::plasma_dispersion(cfg.mode, g, cfg.rho_bar, cfg.entropy, 1e-3, linear);
            o << cfg.mode << ',' << format_double(d.k) << ',' << (linear ? 1 : 0) << ','
              << format_double(d.omega_measured) << ',' << format_double(d.omega_theory) << ','
              << format_double(d.rel_error()) << '\n';
        }
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic Vlasov-Maxwell-Boltzmann toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> suites;
    std::string report, config;
    int threads = 0;
    auto* verify = app.add_subcommand("verify", "run identity suites and write a check,value,tol,pass report");
    verify->add_option("--suite", suites, "suite to run (repeatable); all when omitted");
    verify->add_option("--report", report, "report file, - for stdout; overrides output.report");
    verify->add_option("--config", config, "key = value config file (seed, output.report)");
    verify->add_option("--threads", threads, "worker threads; default RVMB_THREADS or hardware count");

    std::string c_list, out;
    auto* sweep = app.add_subcommand("sweep-c", "rEM against EP over a list of light speeds");
    sweep->add_option("--config", config, "key = value config file");
    sweep->add_option("--c-list", c_list, "comma separated light speeds, overrides physics.c_list");
    sweep->add_option("--out", out, "CSV output, overrides output.csv");

    std::string model;
    auto* solve = app.add_subcommand("solve", "run one 1D solver to time.tmax and dump the final state");
    solve->add_option("model", model, "ep or rem")->required()->check(CLI::IsMember({"ep", "rem"}));
    solve->add_option("--config", config, "key = value config file");
    solve->add_option("--out", out, "CSV output, overrides output.csv");

    auto* curl = app.add_subcommand("curl-div", "curl-div solve on the periodic torus for the manufactured tier");
    curl->add_option("--config", config, "key = value config file");
    curl->add_option("--out", out, "CSV output, overrides output.csv");

    auto* table = app.add_subcommand("collision-table", "collision frequency against |p| for each c");
    table->add_option("--config", config, "key = value config file");
    table->add_option("--c-list", c_list, "comma separated light speeds");
    table->add_option("--out", out, "CSV output, overrides output.csv");

    auto* disp = app.add_subcommand("dispersion", "measured plasma frequency against sqrt(4 pi n + P' k^2)");
    disp->add_option("--config", config, "key = value config file");
    disp->add_option("--out", out, "CSV output, overrides output.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        const harness::ExperimentConfig cfg = config_from(config);
        if (verify->parsed()) return cmd_verify(suites, cfg, report, threads);
        if (sweep->parsed()) return cmd_sweep(cfg, c_list, out);
        if (solve->parsed()) return cmd_solve(model, cfg, out);
        if (curl->parsed()) return cmd_curl_div(cfg, out);
        if (table->parsed()) return cmd_collision_table(cfg, c_list, out);
        if (disp->parsed()) return cmd_dispersion(cfg, out);
    } catch (const harness::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
