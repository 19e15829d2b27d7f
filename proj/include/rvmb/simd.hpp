#pragma once

#include <cstddef>

namespace rvmb::simd {

enum class Isa { scalar, avx2 };

// Chosen once from cpuid; RVMB_SIMD=scalar in the environment forces the reference path.
Isa active_isa();
void force_isa(Isa isa);  // tests only; throws if the ISA is unavailable
bool avx2_available();
const char* isa_name(Isa isa);

/// Parameters of a Juttner evaluation in the stable form
///   M(p) = pref * exp(-(u0 |p|^2/(p0+c) + c |u|^2/(u0+c) - u.p) / T)
struct JuttnerParams {
    double c;
    double ux, uy, uz;
    double u0;
    double inv_T;
    double pref;  // n gamma / (4 pi c^3 e^gamma K2(gamma))
};

// out[i] = M(p_i); p0_out may be null
void juttner_batch(const JuttnerParams& jp, const double* px, const double* py, const double* pz,
                   std::size_t n, double* out, double* p0_out = nullptr);

// g, s and v_phi between the fixed p and every q_i
void invariants_batch(double c, double px, double py, double pz, const double* qx, const double* qy,
                      const double* qz, std::size_t n, double* g, double* s, double* vphi);

namespace scalar {
void juttner_batch(const JuttnerParams&, const double*, const double*, const double*, std::size_t, double*, double*);
void invariants_batch(double, double, double, double, const double*, const double*, const double*, std::size_t,
                      double*, double*, double*);
}  // namespace scalar

namespace avx2 {
void juttner_batch(const JuttnerParams&, const double*, const double*, const double*, std::size_t, double*, double*);
void invariants_batch(double, double, double, double, const double*, const double*, const double*, std::size_t,
                      double*, double*, double*);
}  // namespace avx2

}  // namespace rvmb::simd
