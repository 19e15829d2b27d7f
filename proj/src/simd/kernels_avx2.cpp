#include "rvmb/simd.hpp"

#include <immintrin.h>

#include <cmath>

namespace rvmb::simd::avx2 {

namespace {

// exp via x = n ln2 + r, |r| <= ln2/2, degree-13 Taylor in Horner form; < 2 ulp on [-708, 709]
inline __m256d exp_pd(__m256d x) {
    const __m256d lo = _mm256_set1_pd(-708.0), hi = _mm256_set1_pd(709.0);
    const __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
    __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
    r = _mm256_fnmadd_pd(k, ln2_lo, r);
    static const double inv_fact[] = {1.0,
                                      1.0,
                                      1.0 / 2,
                                      1.0 / 6,
                                      1.0 / 24,
                                      1.0 / 120,
                                      1.0 / 720,
                                      1.0 / 5040,
                                      1.0 / 40320,
                                      1.0 / 362880,
                                      1.0 / 3628800,
                                      1.0 / 39916800,
                                      1.0 / 479001600,
                                      1.0 / 6227020800.0};
    __m256d poly = _mm256_set1_pd(inv_fact[13]);
    for (int i = 12; i >= 0; --i) poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(inv_fact[i]));
    // 2^k through the exponent field
    __m128i k32 = _mm256_cvtpd_epi32(k);
    __m256i k64 = _mm256_cvtepi32_epi64(k32);
    k64 = _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
    __m256d res = _mm256_mul_pd(poly, _mm256_castsi256_pd(k64));
    return _mm256_andnot_pd(under, res);
}

inline __m256d load(const double* p) { return _mm256_loadu_pd(p); }

}  // namespace

void juttner_batch(const JuttnerParams& jp, const double* px, const double* py, const double* pz, std::size_t n,
                   double* out, double* p0_out) {
    const double u2 = jp.ux * jp.ux + jp.uy * jp.uy + jp.uz * jp.uz;
    const __m256d c = _mm256_set1_pd(jp.c), c2 = _mm256_set1_pd(jp.c * jp.c);
    const __m256d ux = _mm256_set1_pd(jp.ux), uy = _mm256_set1_pd(jp.uy), uz = _mm256_set1_pd(jp.uz);
    const __m256d u0 = _mm256_set1_pd(jp.u0), mit = _mm256_set1_pd(-jp.inv_T);
    const __m256d pref = _mm256_set1_pd(jp.pref);
    const __m256d ushift = _mm256_set1_pd(jp.c * u2 / (jp.u0 + jp.c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = load(px + i), y = load(py + i), z = load(pz + i);
        const __m256d p2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)), _mm256_mul_pd(z, z));
        const __m256d p0 = _mm256_sqrt_pd(_mm256_add_pd(c2, p2));
        const __m256d up = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ux, x), _mm256_mul_pd(uy, y)), _mm256_mul_pd(uz, z));
        const __m256d arg = _mm256_sub_pd(_mm256_add_pd(_mm256_div_pd(_mm256_mul_pd(u0, p2), _mm256_add_pd(p0, c)), ushift), up);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(pref, exp_pd(_mm256_mul_pd(arg, mit))));
        if (p0_out) _mm256_storeu_pd(p0_out + i, p0);
    }
    if (i < n) scalar::juttner_batch(jp, px + i, py + i, pz + i, n - i, out + i, p0_out ? p0_out + i : nullptr);
}

void invariants_batch(double cc, double px, double py, double pz, const double* qx, const double* qy,
                      const double* qz, std::size_t n, double* g, double* s, double* vphi) {
    const double p0s = std::sqrt(cc * cc + px * px + py * py + pz * pz);
    const __m256d c2 = _mm256_set1_pd(cc * cc), p0 = _mm256_set1_pd(p0s);
    const __m256d vx = _mm256_set1_pd(px), vy = _mm256_set1_pd(py), vz = _mm256_set1_pd(pz);
    const __m256d two = _mm256_set1_pd(2.0), zero = _mm256_setzero_pd();
    const __m256d quarter_c = _mm256_set1_pd(0.25 * cc);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = load(qx + i), y = load(qy + i), z = load(qz + i);
        const __m256d q2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)), _mm256_mul_pd(z, z));
        const __m256d q0 = _mm256_sqrt_pd(_mm256_add_pd(c2, q2));
        const __m256d dx = _mm256_sub_pd(vx, x), dy = _mm256_sub_pd(vy, y), dz = _mm256_sub_pd(vz, z);
        const __m256d sx = _mm256_add_pd(vx, x), sy = _mm256_add_pd(vy, y), sz = _mm256_add_pd(vz, z);
        const __m256d e = _mm256_add_pd(p0, q0);
        const __m256d dsum = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, sx), _mm256_mul_pd(dy, sy)), _mm256_mul_pd(dz, sz));
        const __m256d ds = _mm256_div_pd(dsum, e);
        const __m256d d2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));
        const __m256d g2 = _mm256_max_pd(zero, _mm256_sub_pd(d2, _mm256_mul_pd(ds, ds)));
        const __m256d pq = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vx, x), _mm256_mul_pd(vy, y)), _mm256_mul_pd(vz, z));
        const __m256d ss = _mm256_mul_pd(two, _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(p0, q0), pq), c2));
        const __m256d gg = _mm256_sqrt_pd(g2);
        _mm256_storeu_pd(g + i, gg);
        _mm256_storeu_pd(s + i, ss);
        const __m256d num = _mm256_mul_pd(_mm256_mul_pd(quarter_c, gg), _mm256_sqrt_pd(ss));
        _mm256_storeu_pd(vphi + i, _mm256_div_pd(num, _mm256_mul_pd(p0, q0)));
    }
    if (i < n) scalar::invariants_batch(cc, px, py, pz, qx + i, qy + i, qz + i, n - i, g + i, s + i, vphi + i);
}

}  // namespace rvmb::simd::avx2
