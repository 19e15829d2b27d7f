#pragma once

#include "rvmb/common.hpp"
#include "rvmb/fluid.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace rvmb::fluid {

/// N^3 nodes on [0, 2pi)^3, x = i * 2pi/N.
struct Grid3DPeriodic {
    int N = 32;
    double dx() const { return 2.0 * kPi / N; }
    double x(int i) const { return i * dx(); }
    std::size_t size() const { return static_cast<std::size_t>(N) * N * N; }
    std::size_t index(int i, int j, int k) const { return (static_cast<std::size_t>(i) * N + j) * N + k; }
    void validate() const;
};

using VecField = std::array<Field, 3>;

VecField zero_vec(const Grid3DPeriodic& g);

// Fills a field by evaluating f(x1, x2, x3) at the nodes.
template <class F>
Field sample(const Grid3DPeriodic& g, F&& f) {
    Field out(g.size());
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j)
            for (int k = 0; k < g.N; ++k) out[g.index(i, j, k)] = f(g.x(i), g.x(j), g.x(k));
    return out;
}

/// Spectral calculus on the torus. Odd derivatives drop every mode with a Nyquist index.
class Torus3D {
public:
    explicit Torus3D(const Grid3DPeriodic& g);
    ~Torus3D();
    Torus3D(const Torus3D&) = delete;
    Torus3D& operator=(const Torus3D&) = delete;

    const Grid3DPeriodic& grid() const { return g_; }

    VecField gradient(const Field& f) const;
    Field divergence(const VecField& v) const;
    VecField curl(const VecField& v) const;
    Field inverse_laplacian(const Field& f) const;  // mean-zero gauge
    VecField project_gradient(const VecField& v) const;
    VecField project_divfree(const VecField& v) const;  // also removes the mean
    // B with curl B = P_df f, div B = 0, zero mean
    VecField curl_div(const VecField& f) const;

    using Spectrum = std::vector<std::complex<double>>;
    Spectrum forward(const Field& f) const;
    Field backward(const Spectrum& F) const;
    std::size_t spectrum_size() const;
    // integer wave vector of a spectral slot; nyquist is set when any component is N/2
    std::array<int, 3> wave(std::size_t slot, bool& nyquist) const;

private:
    Grid3DPeriodic g_;
    struct Plans;
    std::unique_ptr<Plans> p_;
};

double sup_norm(const Field& f);
double sup_norm(const VecField& v);
double mean(const Field& f);
VecField times(const Field& a, const VecField& v);
VecField cross(const VecField& a, const VecField& b);
VecField add(const VecField& a, const VecField& b, double sb = 1.0);
VecField scaled(const VecField& a, double s);
// (a . grad) b
VecField advect(const Torus3D& T, const VecField& a, const VecField& b);

/// dt E0 along an EP solution: E0 = grad phi with Laplacian phi = 4pi(n_bar - n0), so dt E0 = 4pi P_grad(n0 u0).
VecField ep_dtE0(const Torus3D& T, const Field& n0, const VecField& u0);

struct CurlDivResult {
    VecField B;
    double div_B = 0.0;           // sup |div B|
    double curl_residual = 0.0;   // sup |curl B - f|
    double f_divergence = 0.0;    // sup |div f|; zero for consistent inputs
    double f_mean = 0.0;          // removed constant part of f
    double curl_u0 = 0.0;
    bool consistent = true;
};

// f = dtE0 - 4pi n0 u0. Throws DomainError when u0 is not irrotational to 1e-10.
CurlDivResult curl_div_solve(const Torus3D& T, const Field& n0, const VecField& u0, const VecField& dtE0,
                             double consistency_tol = 1e-8);

struct ForcingReport {
    double decomposition_residual = 0.0;  // sup |f - (grad Phi - 4pi (n0 - n_bar) u0)|
    double max_pairing = 0.0;             // max |<grad Phi, w>| over unit divergence-free w
    double effective_gap = 0.0;           // max |<f, w> + 4pi <(n0 - n_bar) u0, w>|
    int tests = 0;
};

// Phi = dt phi - 4pi n_bar phi0 with u0 = grad phi0
ForcingReport forcing_decomposition_check(const Torus3D& T, const Field& n0, const VecField& u0, double n_bar,
                                          int tests = 10, std::uint64_t seed = 7);

// random smooth divergence-free field with <w, w> = 1 (grid mean inner product)
VecField random_divfree(const Torus3D& T, std::uint64_t seed, int modes = 6, int kmax = 3);

/// Zeroth- and first-order coefficients of the expansion plus the time derivatives the remainder needs.
struct ExpansionTier {
    double n_bar = 1.0;
    Field n0, n1;
    VecField u0, u1, E0, E1, B0, B1;
    VecField dtE1, dtB1;
};

// E0, E1, B1 and the time derivatives from (n0, u0, n1, u1) through the zeroth- and first-order equations.
ExpansionTier consistent_tier(const Torus3D& T, double n_bar, const Polytrope& eos, const Field& n0,
                              const VecField& u0, const Field& n1, const VecField& u1);

// the smooth test tier used by the tests, the CLI and the acceptance run
ExpansionTier manufactured_tier(const Torus3D& T, double n_bar = 1.0, double S = 0.0);

struct Remainder {
    Field R_n;
    VecField R_u, R_E, R_B;
    double gauss = 0.0;   // sup |div R_E + 4pi R_n|
    double div_RB = 0.0;  // sup |div R_B|
    double norm = 0.0;    // max of the four sup norms
};

Remainder remainder_residuals(const Torus3D& T, const ExpansionTier& tier, double c);

}  // namespace rvmb::fluid
