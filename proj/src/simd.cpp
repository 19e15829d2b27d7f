#include "rvmb/simd.hpp"

#include "rvmb/common.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace rvmb::simd {

namespace {

bool detect_avx2() {
#if defined(RVMB_BUILD_AVX2) && (defined(__x86_64__) || defined(_M_X64))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() {
    const char* env = std::getenv("RVMB_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return detect_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

bool avx2_available() {
    static const bool ok = detect_avx2();
    return ok;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_available()) throw DomainError("force_isa: AVX2 not available");
    current().store(isa);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void juttner_batch(const JuttnerParams& jp, const double* px, const double* py, const double* pz, std::size_t n,
                   double* out, double* p0_out) {
#if defined(RVMB_BUILD_AVX2)
    if (active_isa() == Isa::avx2) return avx2::juttner_batch(jp, px, py, pz, n, out, p0_out);
#endif
    scalar::juttner_batch(jp, px, py, pz, n, out, p0_out);
}

void invariants_batch(double c, double px, double py, double pz, const double* qx, const double* qy,
                      const double* qz, std::size_t n, double* g, double* s, double* vphi) {
#if defined(RVMB_BUILD_AVX2)
    if (active_isa() == Isa::avx2) return avx2::invariants_batch(c, px, py, pz, qx, qy, qz, n, g, s, vphi);
#endif
    scalar::invariants_batch(c, px, py, pz, qx, qy, qz, n, g, s, vphi);
}

#if !defined(RVMB_BUILD_AVX2)
// without the ISA flags the AVX2 entry points forward to the reference kernels
namespace avx2 {
void juttner_batch(const JuttnerParams& jp, const double* px, const double* py, const double* pz, std::size_t n,
                   double* out, double* p0_out) {
    scalar::juttner_batch(jp, px, py, pz, n, out, p0_out);
}
void invariants_batch(double c, double px, double py, double pz, const double* qx, const double* qy,
                      const double* qz, std::size_t n, double* g, double* s, double* vphi) {
    scalar::invariants_batch(c, px, py, pz, qx, qy, qz, n, g, s, vphi);
}
}  // namespace avx2
#endif

}  // namespace rvmb::simd
