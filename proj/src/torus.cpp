#include "rvmb/torus.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

namespace rvmb::fluid {

void Grid3DPeriodic::validate() const {
    if (N < 8 || N % 2) throw DomainError("Grid3DPeriodic: N must be even and at least 8");
}

VecField zero_vec(const Grid3DPeriodic& g) { return {Field(g.size(), 0.0), Field(g.size(), 0.0), Field(g.size(), 0.0)}; }

struct Torus3D::Plans {
    double* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd = nullptr, bwd = nullptr;
    std::size_t nc = 0;
};

Torus3D::Torus3D(const Grid3DPeriodic& g) : g_(g), p_(std::make_unique<Plans>()) {
    g_.validate();
    const int N = g_.N;
    p_->nc = static_cast<std::size_t>(N) * N * (N / 2 + 1);
    p_->in = fftw_alloc_real(g_.size());
    p_->out = fftw_alloc_complex(p_->nc);
    p_->fwd = fftw_plan_dft_r2c_3d(N, N, N, p_->in, p_->out, FFTW_ESTIMATE);
    p_->bwd = fftw_plan_dft_c2r_3d(N, N, N, p_->out, p_->in, FFTW_ESTIMATE);
}

Torus3D::~Torus3D() {
    fftw_destroy_plan(p_->fwd);
    fftw_destroy_plan(p_->bwd);
    fftw_free(p_->in);
    fftw_free(p_->out);
}

std::size_t Torus3D::spectrum_size() const { return p_->nc; }

Torus3D::Spectrum Torus3D::forward(const Field& f) const {
    std::copy(f.begin(), f.end(), p_->in);
    fftw_execute(p_->fwd);
    Spectrum F(p_->nc);
    std::memcpy(static_cast<void*>(F.data()), p_->out, p_->nc * sizeof(fftw_complex));
    return F;
}

Field Torus3D::backward(const Spectrum& F) const {
    std::memcpy(p_->out, static_cast<const void*>(F.data()), p_->nc * sizeof(fftw_complex));
    fftw_execute(p_->bwd);
    Field f(p_->in, p_->in + g_.size());
    const double s = 1.0 / static_cast<double>(g_.size());
    for (double& v : f) v *= s;
    return f;
}

std::array<int, 3> Torus3D::wave(std::size_t slot, bool& nyquist) const {
    const int N = g_.N, H = N / 2 + 1;
    const int m = static_cast<int>(slot % H);
    const int b = static_cast<int>((slot / H) % N);
    const int a = static_cast<int>(slot / (static_cast<std::size_t>(H) * N));
    nyquist = (a == N / 2) || (b == N / 2) || (m == N / 2);
    return {a <= N / 2 ? a : a - N, b <= N / 2 ? b : b - N, m};
}

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

VecField Torus3D::gradient(const Field& f) const {
    const Spectrum F = forward(f);
    VecField out;
    for (int d = 0; d < 3; ++d) {
        Spectrum G(F.size());
        for (std::size_t s = 0; s < F.size(); ++s) {
            bool ny;
            const auto k = wave(s, ny);
            G[s] = ny ? 0.0 : I * static_cast<double>(k[d]) * F[s];
        }
        out[d] = backward(G);
    }
    return out;
}

Field Torus3D::divergence(const VecField& v) const {
    Spectrum D(p_->nc, 0.0);
    for (int d = 0; d < 3; ++d) {
        const Spectrum F = forward(v[d]);
        for (std::size_t s = 0; s < F.size(); ++s) {
            bool ny;
            const auto k = wave(s, ny);
            if (!ny) D[s] += I * static_cast<double>(k[d]) * F[s];
        }
    }
    return backward(D);
}

VecField Torus3D::curl(const VecField& v) const {
    const Spectrum F[3] = {forward(v[0]), forward(v[1]), forward(v[2])};
    VecField out;
    for (int d = 0; d < 3; ++d) {
        const int a = (d + 1) % 3, b = (d + 2) % 3;
        Spectrum C(p_->nc);
        for (std::size_t s = 0; s < C.size(); ++s) {
            bool ny;
            const auto k = wave(s, ny);
            C[s] = ny ? 0.0 : I * (static_cast<double>(k[a]) * F[b][s] - static_cast<double>(k[b]) * F[a][s]);
        }
        out[d] = backward(C);
    }
    return out;
}

Field Torus3D::inverse_laplacian(const Field& f) const {
    Spectrum F = forward(f);
    for (std::size_t s = 0; s < F.size(); ++s) {
        bool ny;
        const auto k = wave(s, ny);
        const double k2 = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
        F[s] = k2 > 0.0 ? -F[s] / k2 : 0.0;
    }
    return backward(F);
}

VecField Torus3D::project_gradient(const VecField& v) const {
    const Spectrum F[3] = {forward(v[0]), forward(v[1]), forward(v[2])};
    VecField out;
    for (int d = 0; d < 3; ++d) {
        Spectrum P(p_->nc);
        for (std::size_t s = 0; s < P.size(); ++s) {
            bool ny;
            const auto k = wave(s, ny);
            const double k2 = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
            if (ny || k2 == 0.0) {
                P[s] = 0.0;
                continue;
            }
            const std::complex<double> kv = double(k[0]) * F[0][s] + double(k[1]) * F[1][s] + double(k[2]) * F[2][s];
            P[s] = double(k[d]) * kv / k2;
        }
        out[d] = backward(P);
    }
    return out;
}

VecField Torus3D::project_divfree(const VecField& v) const {
    const Spectrum F[3] = {forward(v[0]), forward(v[1]), forward(v[2])};
    VecField out;
    for (int d = 0; d < 3; ++d) {
        Spectrum P(p_->nc);
        for (std::size_t s = 0; s < P.size(); ++s) {
            bool ny;
            const auto k = wave(s, ny);
            const double k2 = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
            if (ny || k2 == 0.0) {
                P[s] = 0.0;
                continue;
            }
            const std::complex<double> kv = double(k[0]) * F[0][s] + double(k[1]) * F[1][s] + double(k[2]) * F[2][s];
            P[s] = F[d][s] - double(k[d]) * kv / k2;
        }
        out[d] = backward(P);
    }
    return out;
}

VecField Torus3D::curl_div(const VecField& f) const {
    // B^ = i k x f^ / |k|^2
    const Spectrum F[3] = {forward(f[0]), forward(f[1]), forward(f[2])};
    VecField out;
    for (int d = 0; d < 3; ++d) {
        const int a = (d + 1) % 3, b = (d + 2) % 3;
        Spectrum B(p_->nc);
        for (std::size_t s = 0; s < B.size(); ++s) {
            bool ny;
            const auto k = wave(s, ny);
            const double k2 = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
            B[s] = (ny || k2 == 0.0) ? 0.0 : I * (double(k[a]) * F[b][s] - double(k[b]) * F[a][s]) / k2;
        }
        out[d] = backward(B);
    }
    return out;
}

double sup_norm(const Field& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

double sup_norm(const VecField& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < v[0].size(); ++i)
        m = std::max(m, std::sqrt(v[0][i] * v[0][i] + v[1][i] * v[1][i] + v[2][i] * v[2][i]));
    return m;
}

double mean(const Field& f) {
    double s = 0.0;
    for (double v : f) s += v;
    return s / static_cast<double>(f.size());
}

VecField times(const Field& a, const VecField& v) {
    VecField out = v;
    for (int d = 0; d < 3; ++d)
        for (std::size_t i = 0; i < a.size(); ++i) out[d][i] *= a[i];
    return out;
}

VecField cross(const VecField& a, const VecField& b) {
    VecField out{Field(a[0].size()), Field(a[0].size()), Field(a[0].size())};
    for (std::size_t i = 0; i < a[0].size(); ++i) {
        out[0][i] = a[1][i] * b[2][i] - a[2][i] * b[1][i];
        out[1][i] = a[2][i] * b[0][i] - a[0][i] * b[2][i];
        out[2][i] = a[0][i] * b[1][i] - a[1][i] * b[0][i];
    }
    return out;
}

VecField add(const VecField& a, const VecField& b, double sb) {
    VecField out = a;
    for (int d = 0; d < 3; ++d)
        for (std::size_t i = 0; i < a[d].size(); ++i) out[d][i] += sb * b[d][i];
    return out;
}

VecField scaled(const VecField& a, double s) {
    VecField out = a;
    for (auto& f : out)
        for (double& v : f) v *= s;
    return out;
}

VecField advect(const Torus3D& T, const VecField& a, const VecField& b) {
    VecField out{Field(a[0].size(), 0.0), Field(a[0].size(), 0.0), Field(a[0].size(), 0.0)};
    for (int d = 0; d < 3; ++d) {
        const VecField g = T.gradient(b[d]);
        for (std::size_t i = 0; i < a[0].size(); ++i)
            out[d][i] = a[0][i] * g[0][i] + a[1][i] * g[1][i] + a[2][i] * g[2][i];
    }
    return out;
}

VecField ep_dtE0(const Torus3D& T, const Field& n0, const VecField& u0) {
    return scaled(T.project_gradient(times(n0, u0)), 4.0 * kPi);
}

namespace {
void remove_mean(VecField& v, double* removed = nullptr) {
    double m2 = 0.0;
    for (auto& f : v) {
        const double m = mean(f);
        for (double& x : f) x -= m;
        m2 += m * m;
    }
    if (removed) *removed = std::sqrt(m2);
}
}  // namespace

CurlDivResult curl_div_solve(const Torus3D& T, const Field& n0, const VecField& u0, const VecField& dtE0,
                             double consistency_tol) {
    CurlDivResult r;
    r.curl_u0 = sup_norm(T.curl(u0));
    if (r.curl_u0 > 1e-10 * std::max(1.0, sup_norm(u0))) throw DomainError("curl_div_solve: u0 is not irrotational");
    VecField f = add(dtE0, times(n0, u0), -4.0 * kPi);
    remove_mean(f, &r.f_mean);
    r.f_divergence = sup_norm(T.divergence(f));
    r.consistent = r.f_divergence <= consistency_tol;
    r.B = T.curl_div(f);
    r.div_B = sup_norm(T.divergence(r.B));
    r.curl_residual = sup_norm(add(T.curl(r.B), f, -1.0));
    return r;
}

VecField random_divfree(const Torus3D& T, std::uint64_t seed, int modes, int kmax) {
    const Grid3DPeriodic& g = T.grid();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kd(-kmax, kmax);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    VecField A = zero_vec(g);
    for (int m = 0; m < modes; ++m) {
        int k[3];
        do {
            for (int& v : k) v = kd(rng);
        } while (k[0] == 0 && k[1] == 0 && k[2] == 0);
        const double amp[3] = {ud(rng), ud(rng), ud(rng)};
        const double phase = kPi * ud(rng);
        for (int d = 0; d < 3; ++d) {
            const Field s = sample(g, [&](double x, double y, double z) {
                return amp[d] * std::cos(k[0] * x + k[1] * y + k[2] * z + phase);
            });
            for (std::size_t i = 0; i < s.size(); ++i) A[d][i] += s[i];
        }
    }
    VecField w = T.curl(A);
    double nn = 0.0;
    for (int d = 0; d < 3; ++d)
        for (double v : w[d]) nn += v * v;
    nn = std::sqrt(nn / static_cast<double>(g.size()));
    return scaled(w, 1.0 / nn);
}

namespace {
double pairing(const VecField& a, const VecField& b) {
    double s = 0.0;
    for (int d = 0; d < 3; ++d)
        for (std::size_t i = 0; i < a[d].size(); ++i) s += a[d][i] * b[d][i];
    return s / static_cast<double>(a[0].size());
}
}  // namespace

ForcingReport forcing_decomposition_check(const Torus3D& T, const Field& n0, const VecField& u0, double n_bar,
                                          int tests, std::uint64_t seed) {
    ForcingReport r;
    const VecField nu = times(n0, u0);
    VecField f = add(ep_dtE0(T, n0, u0), nu, -4.0 * kPi);
    remove_mean(f);
    const Field dt_phi = T.inverse_laplacian(T.divergence(scaled(nu, 4.0 * kPi)));
    const Field phi0 = T.inverse_laplacian(T.divergence(u0));
    Field Phi(dt_phi.size());
    for (std::size_t i = 0; i < Phi.size(); ++i) Phi[i] = dt_phi[i] - 4.0 * kPi * n_bar * phi0[i];
    const VecField gPhi = T.gradient(Phi);
    Field dn(n0.size());
    for (std::size_t i = 0; i < dn.size(); ++i) dn[i] = n0[i] - n_bar;
    VecField eff = scaled(times(dn, u0), -4.0 * kPi);
    remove_mean(eff);
    r.decomposition_residual = sup_norm(add(f, add(gPhi, eff), -1.0));
    for (int t = 0; t < tests; ++t) {
        const VecField w = random_divfree(T, seed + 977 * t);
        r.max_pairing = std::max(r.max_pairing, std::abs(pairing(gPhi, w)));
        r.effective_gap = std::max(r.effective_gap, std::abs(pairing(f, w) - pairing(eff, w)));
    }
    r.tests = tests;
    return r;
}

ExpansionTier consistent_tier(const Torus3D& T, double n_bar, const Polytrope& eos, const Field& n0,
                              const VecField& u0, const Field& n1, const VecField& u1) {
    const Grid3DPeriodic& g = T.grid();
    ExpansionTier t;
    t.n_bar = n_bar;
    t.n0 = n0;
    t.n1 = n1;
    t.u0 = u0;
    t.u1 = u1;
    Field s0(g.size()), s1(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        s0[i] = 4.0 * kPi * (n_bar - n0[i]);
        s1[i] = -4.0 * kPi * n1[i];
    }
    t.E0 = T.gradient(T.inverse_laplacian(s0));
    t.E1 = T.gradient(T.inverse_laplacian(s1));
    t.B0 = zero_vec(g);
    const VecField nu0 = times(n0, u0);
    t.dtE1 = scaled(T.project_gradient(add(times(n0, u1), times(n1, u0))), 4.0 * kPi);
    // f = dtE0 - 4pi n0 u0 = -4pi P_df(n0 u0), and B1 = curl_div(f)
    t.B1 = T.curl_div(scaled(T.project_divfree(nu0), -4.0 * kPi));
    // dt(n0 u0) from the zeroth-order equations
    const Field dn0 = T.divergence(nu0);
    Field T0(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) T0[i] = eos.temperature(n0[i]);
    VecField du0 = add(advect(T, u0, u0), T.gradient(T0), 2.5);
    du0 = scaled(add(du0, t.E0), -1.0);
    VecField dnu = add(times(n0, du0), times(dn0, u0), -1.0);
    t.dtB1 = T.curl_div(scaled(T.project_divfree(dnu), -4.0 * kPi));
    return t;
}

ExpansionTier manufactured_tier(const Torus3D& T, double n_bar, double S) {
    const Grid3DPeriodic& g = T.grid();
    const Field n0 = sample(g, [&](double x, double, double) { return n_bar + 0.1 * std::cos(x); });
    const VecField u0 = T.gradient(sample(g, [](double x, double y, double z) {
        return std::sin(x) * std::sin(y) * std::sin(z);
    }));
    const Field n1 = sample(g, [](double x, double y, double) { return 0.5 * std::sin(x + y); });
    const VecField u1 = T.gradient(sample(g, [](double, double y, double z) {
        return 0.5 * std::cos(y) * std::cos(2.0 * z);
    }));
    return consistent_tier(T, n_bar, Polytrope::from_entropy(S), n0, u0, n1, u1);
}

Remainder remainder_residuals(const Torus3D& T, const ExpansionTier& t, double c) {
    if (!(c > 0.0)) throw DomainError("remainder_residuals: c must be positive");
    Remainder r;
    const double c2 = c * c, c3 = c2 * c;
    r.R_n = T.divergence(times(t.n1, t.u1));
    for (double& v : r.R_n) v /= c2;
    VecField Ru = scaled(advect(T, t.u1, t.u1), 1.0 / c2);
    Ru = add(Ru, add(cross(t.u1, t.B0), cross(t.u0, t.B1)), 1.0 / c2);
    r.R_u = add(Ru, cross(t.u1, t.B1), 1.0 / c3);
    VecField RE = scaled(t.dtE1, 1.0 / c);
    RE = add(RE, add(times(t.n1, t.u0), times(t.n0, t.u1)), -4.0 * kPi / c);
    r.R_E = add(RE, times(t.n1, t.u1), -4.0 * kPi / c2);
    r.R_B = scaled(t.dtB1, 1.0 / c);

    Field g = T.divergence(r.R_E);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += 4.0 * kPi * r.R_n[i];
    r.gauss = sup_norm(g);
    r.div_RB = sup_norm(T.divergence(r.R_B));
    r.norm = std::max({sup_norm(r.R_n), sup_norm(r.R_u), sup_norm(r.R_E), sup_norm(r.R_B)});
    return r;
}

}  // namespace rvmb::fluid
