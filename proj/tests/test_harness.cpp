#include "doctest.h"
#include "rvmb/harness.hpp"

#include <cstdlib>
#include <sstream>

using namespace rvmb;
using namespace rvmb::harness;

namespace {

ExperimentConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "test");
}

std::string csv_of(const VerifyReport& r) {
    std::ostringstream o;
    r.write_csv(o);
    return o.str();
}

std::string csv_of(const SweepResult& r) {
    std::ostringstream o;
    r.write_csv(o);
    return o.str();
}

const VerifyCheck* find(const VerifyReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

ExperimentConfig small_sweep() {
    ExperimentConfig cfg;
    cfg.grid_n = 64;
    cfg.t_end = 0.05;
    return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config parsing") {
    const ExperimentConfig d = parse("");
    CHECK(d.grid_n == 512);
    CHECK(d.T_bar() == doctest::Approx(1.0).epsilon(1e-14));

    const ExperimentConfig c = parse(
        "# comment line\n"
        "grid.n = 128   # trailing comment\n"
        "physics.c_list = 10, 20,40\n"
        "physics.eps_list = 0.1\n"
        "time.tmax=0.25\n"
        "seed = 42\n"
        "output.csv = sweep.csv\n");
    CHECK(c.grid_n == 128);
    CHECK(c.c_list == std::vector<double>{10, 20, 40});
    CHECK(c.eps_list == std::vector<double>{0.1});
    CHECK(c.t_end == 0.25);
    CHECK(c.seed == 42u);
    CHECK(c.csv == "sweep.csv");

    CHECK_THROWS_AS(parse("grid.nn = 128\n"), ConfigError);
    CHECK_THROWS_AS(parse("grid.n 128\n"), ConfigError);
    CHECK_THROWS_AS(parse("grid.n = 12x\n"), ConfigError);
    CHECK_THROWS_AS(parse("grid.n = 127\n"), ConfigError);
    CHECK_THROWS_AS(parse("tol.slope = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse("tol.gauss = -1e-8\n"), ConfigError);
    CHECK_THROWS_AS(parse("seed = -3\n"), ConfigError);
    CHECK_THROWS_AS(parse("physics.c_list = 10, -20\n"), ConfigError);
    try {
        parse("grid.n = 64\nphysics.cc = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("test:2") != std::string::npos);
        CHECK(std::string(e.what()).find("physics.cc") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/rvmb.cfg"), ConfigError);
}

TEST_CASE("report format and the overall flag") {
    VerifyReport r;
    r.checks.push_back({"s", "a", 1e-3, 1e-2, true, 0.5});
    r.checks.push_back({"s", "b", 0.25, 1.0, true, 0.1});
    CHECK(r.pass());
    CHECK(csv_of(r) == "check,value,tol,pass\ns/a,0.001,0.01,1\ns/b,0.25,1,1\n");
    r.checks.push_back({"s", "c", 2.0, 1.0, false, 0.0});
    CHECK_FALSE(r.pass());
    std::ostringstream t;
    r.write_table(t);
    CHECK(t.str().find("FAIL") != std::string::npos);
    CHECK(t.str().find("2/3 checks passed") != std::string::npos);
    CHECK(VerifyReport{}.pass());
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("verify: bessel passes, unknown suite is a usage error") {
    const VerifyReport r = run_verify({"bessel"});
    CHECK(r.pass());
    CHECK(r.checks.size() >= 4);
    for (const auto& c : r.checks) CHECK(c.tol > 0.0);
    CHECK_THROWS_AS(run_verify({"bessel", "nonsense"}), UsageError);
    CHECK(known_suites().size() == 7);
}

TEST_CASE("verify: report order and values do not depend on the thread count") {
    VerifyOptions one, two;
    one.threads = 1;
    two.threads = 3;
    const std::vector<std::string> suites{"thermo", "bessel", "moments"};
    const VerifyReport a = run_verify(suites, one), b = run_verify(suites, two);
    CHECK(csv_of(a) == csv_of(b));
    CHECK(a.checks.front().suite == "thermo");
    CHECK(a.checks.back().suite == "moments");
}

TEST_CASE("verify: a sign flip in a_A is caught by name") {
    VerifyOptions opt;
    // flip the sign of the Kronecker term of a_A, which adds 2 delta_ij/(A D^2)
    opt.kernels = [](const Vec3& om, const Vec3& p, double c) {
        field::KernelSet k = field::kernels(om, p, c);
        const double A = 1.0 + p.squaredNorm() / (c * c), D = field::denominator(om, p, c);
        k.aA += Mat3::Identity() * (2.0 / (A * D * D));
        return k;
    };
    const VerifyReport r = run_verify({"field-kernels"}, opt);
    CHECK_FALSE(r.pass());
    const VerifyCheck* a = find(r, "angular-null-aA");
    const VerifyCheck* b = find(r, "angular-null-aB");
    REQUIRE(a);
    REQUIRE(b);
    CHECK_FALSE(a->pass);
    CHECK(a->value > 1.0);
    CHECK(b->pass);
    CHECK(run_verify({"field-kernels"}).pass());
}

TEST_CASE("thread count from the environment") {
    CHECK(thread_count(5) == 5);
    setenv("RVMB_THREADS", "3", 1);
    CHECK(thread_count(0) == 3);
    setenv("RVMB_THREADS", "junk", 1);
    CHECK(thread_count(0) >= 1);
    unsetenv("RVMB_THREADS");
}

TEST_CASE("sweep: single c leaves the slope empty") {
    ExperimentConfig cfg = small_sweep();
    cfg.c_list = {20.0};
    const SweepResult r = run_sweep(cfg);
    REQUIRE(r.rows.size() == 1);
    CHECK_FALSE(r.has_slope);
    const std::string csv = csv_of(r);
    CHECK(csv.rfind("c,eps,error,error_first,gauss_residual,steps,slope\n", 0) == 0);
    CHECK(csv.back() == '\n');
    CHECK(csv[csv.size() - 2] == ',');
    CHECK(r.rows[0].error > 0.0);
}

TEST_CASE("sweep: deterministic output and a fitted slope") {
    ExperimentConfig cfg = small_sweep();
    cfg.c_list = {10.0, 20.0};
    const SweepResult a = run_sweep(cfg), b = run_sweep(cfg);
    CHECK(csv_of(a) == csv_of(b));
    CHECK(a.has_slope);
    CHECK(a.slope < 0.0);
    std::ostringstream plot;
    a.write_plot(plot);
    CHECK(plot.str().rfind("# c error", 0) == 0);
}

TEST_CASE("sweep: solver failure names the offending c") {
    ExperimentConfig cfg = small_sweep();
    cfg.c_list = {20.0, 0.3};  // |u| = 0.2 is not admissible at c = 0.3
    try {
        run_sweep(cfg);
        FAIL("expected SolverError");
    } catch (const SolverError& e) {
        CHECK(std::string(e.what()).find("c = 0.3") != std::string::npos);
    }
}

}  // TEST_SUITE
