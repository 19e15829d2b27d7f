#pragma once

#include "rvmb/common.hpp"
#include "rvmb/field_repr.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace rvmb::harness {

// Unknown suite or subcommand input; the CLI maps it to exit status 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` experiment description. Unknown keys are rejected.
struct ExperimentConfig {
    std::string suite = "newtonian";
    int grid_n = 512;
    double length = 2.0 * kPi;
    double t_end = 0.5;
    double cfl = 0.3;
    double c = 10.0;
    std::vector<double> c_list{10.0, 20.0, 40.0, 80.0};
    std::vector<double> eps_list;  // reserved for collisional sweeps, echoed but unused
    double entropy = 1.5 * (std::log(2.0 * kPi) + 5.0 / 3.0);  // T = 1 at density 1
    double rho_bar = 1.0;
    double amp_n = 0.2, amp_u = 0.2;
    double first_order = 1.0;
    int mode = 1;
    int torus_n = 32;
    double tol_slope = 0.2;
    double tol_gauss = 1e-8;
    double tol_curl = 1e-8;
    std::uint64_t seed = 1;
    std::string csv = "out.csv";
    std::string plot;    // gnuplot data file, skipped when empty
    std::string report = "verify_report.csv";

    void validate() const;
    double T_bar() const;  // background temperature on the configured isentrope
};

ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

struct VerifyCheck {
    std::string suite, name;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool pass() const;
    // check,value,tol,pass
    void write_csv(std::ostream& out) const;
    void write_table(std::ostream& out) const;
};

using KernelFn = std::function<field::KernelSet(const Vec3& omega, const Vec3& p, double c)>;

struct VerifyOptions {
    KernelFn kernels;  // defaults to field::kernels; replaced only by mutation tests
    int threads = 0;   // 0 reads RVMB_THREADS, falling back to the hardware count
    std::uint64_t seed = 1;
};

const std::vector<std::string>& known_suites();
// Suites run concurrently, checks within a suite in order; the report is ordered by the request.
VerifyReport run_verify(const std::vector<std::string>& suites, const VerifyOptions& opt = {});
int thread_count(int requested);

struct SweepRow {
    double c = 0.0;
    double eps = 0.0;
    double error = 0.0;
    double error_first = 0.0;
    double gauss_residual = 0.0;
    int steps = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool has_slope = false;
    double slope = 0.0;
    void write_csv(std::ostream& out) const;
    void write_plot(std::ostream& out) const;
};

// rEM against EP for every c in the list; solver failures are rethrown naming the c
SweepResult run_sweep(const ExperimentConfig& cfg);

// Shortest round-trip decimal form, so equal doubles print identically
std::string format_double(double v);

}  // namespace rvmb::harness
