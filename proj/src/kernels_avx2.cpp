// AVX2 kernel variants. This translation unit is compiled with -mavx2; the
// dispatcher only routes here after a runtime CPUID check.

#include "lambda3/kernels.hpp"

#if defined(LAMBDA3_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <cassert>

namespace lambda3::kernels::avx2 {

namespace {

// Horizontal sum of 4 x u64.
inline std::uint64_t hsum_u64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

inline __m256i load256(const std::uint32_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline __m128i load128(const std::uint32_t* p) {
    return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

}  // namespace

bool supported() { return __builtin_cpu_supports("avx2"); }

std::uint64_t sum_u32(std::span<const std::uint32_t> values) {
    const std::size_t n = values.size();
    const std::uint32_t* p = values.data();
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i v = load256(p + i);
        acc0 = _mm256_add_epi64(acc0, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v)));
        acc1 = _mm256_add_epi64(acc1, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1)));
    }
    std::uint64_t acc = hsum_u64(_mm256_add_epi64(acc0, acc1));
    for (; i < n; ++i) acc += p[i];
    return acc;
}

std::uint32_t max_u32(std::span<const std::uint32_t> values) {
    const std::size_t n = values.size();
    const std::uint32_t* p = values.data();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) acc = _mm256_max_epu32(acc, load256(p + i));
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint32_t best = 0;
    for (std::uint32_t lane : lanes)
        if (lane > best) best = lane;
    for (; i < n; ++i)
        if (p[i] > best) best = p[i];
    return best;
}

PairMoments pair_moments_u32(std::span<const std::uint32_t> x,
                             std::span<const std::uint32_t> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const std::uint32_t* px = x.data();
    const std::uint32_t* py = y.data();

    const __m256i lo32 = _mm256_set1_epi64x(0xffffffffLL);
    __m256i sx = _mm256_setzero_si256();
    __m256i sy = _mm256_setzero_si256();
    __m256i sxx = _mm256_setzero_si256();
    __m256i syy = _mm256_setzero_si256();
    __m256i sxy = _mm256_setzero_si256();

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i vx = load256(px + i);
        const __m256i vy = load256(py + i);
        // Even/odd 32-bit lanes widened to 4 x u64 each.
        const __m256i xe = _mm256_and_si256(vx, lo32);
        const __m256i xo = _mm256_srli_epi64(vx, 32);
        const __m256i ye = _mm256_and_si256(vy, lo32);
        const __m256i yo = _mm256_srli_epi64(vy, 32);

        sx = _mm256_add_epi64(sx, _mm256_add_epi64(xe, xo));
        sy = _mm256_add_epi64(sy, _mm256_add_epi64(ye, yo));
        // _mm256_mul_epu32 multiplies the even 32-bit lanes into u64.
        sxx = _mm256_add_epi64(sxx, _mm256_mul_epu32(xe, xe));
        sxx = _mm256_add_epi64(sxx, _mm256_mul_epu32(xo, xo));
        syy = _mm256_add_epi64(syy, _mm256_mul_epu32(ye, ye));
        syy = _mm256_add_epi64(syy, _mm256_mul_epu32(yo, yo));
        sxy = _mm256_add_epi64(sxy, _mm256_mul_epu32(xe, ye));
        sxy = _mm256_add_epi64(sxy, _mm256_mul_epu32(xo, yo));
    }

    PairMoments m;
    m.count = n;
    m.sum_x = hsum_u64(sx);
    m.sum_y = hsum_u64(sy);
    m.sum_xx = hsum_u64(sxx);
    m.sum_yy = hsum_u64(syy);
    m.sum_xy = hsum_u64(sxy);
    for (; i < n; ++i) {
        const std::uint64_t a = px[i];
        const std::uint64_t b = py[i];
        m.sum_x += a;
        m.sum_y += b;
        m.sum_xx += a * a;
        m.sum_yy += b * b;
        m.sum_xy += a * b;
    }
    return m;
}

std::uint64_t sum_gather_u32(std::span<const std::uint32_t> values,
                             std::span<const std::uint32_t> indices) {
    const std::size_t n = indices.size();
    const auto* base = reinterpret_cast<const int*>(values.data());
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i idx = load256(indices.data() + i);
        const __m256i v = _mm256_i32gather_epi32(base, idx, 4);
        acc0 = _mm256_add_epi64(acc0, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v)));
        acc1 = _mm256_add_epi64(acc1, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1)));
    }
    std::uint64_t acc = hsum_u64(_mm256_add_epi64(acc0, acc1));
    for (; i < n; ++i) acc += values[indices[i]];
    return acc;
}

std::uint64_t intersect_count_u32(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b) {
    // Block-wise 4x4 all-pairs compare; each side advances past the block
    // with the smaller maximum. Inputs are strictly ascending, so every
    // element matches at most once and the per-lane OR mask counts exactly.
    std::size_t i = 0, j = 0;
    std::uint64_t count = 0;
    if (a.size() >= 4 && b.size() >= 4) {
        __m128i va = load128(a.data());
        __m128i vb = load128(b.data());
        for (;;) {
            const __m128i cmp0 = _mm_cmpeq_epi32(va, vb);
            const __m128i rot1 = _mm_shuffle_epi32(vb, _MM_SHUFFLE(0, 3, 2, 1));
            const __m128i rot2 = _mm_shuffle_epi32(vb, _MM_SHUFFLE(1, 0, 3, 2));
            const __m128i rot3 = _mm_shuffle_epi32(vb, _MM_SHUFFLE(2, 1, 0, 3));
            __m128i any = _mm_or_si128(cmp0, _mm_cmpeq_epi32(va, rot1));
            any = _mm_or_si128(any, _mm_cmpeq_epi32(va, rot2));
            any = _mm_or_si128(any, _mm_cmpeq_epi32(va, rot3));
            count += static_cast<unsigned>(
                __builtin_popcount(_mm_movemask_ps(_mm_castsi128_ps(any))));

            const std::uint32_t amax = a[i + 3];
            const std::uint32_t bmax = b[j + 3];
            bool more = true;
            if (amax <= bmax) {
                i += 4;
                if (i + 4 > a.size()) more = false;
            }
            if (bmax <= amax) {
                j += 4;
                if (j + 4 > b.size()) more = false;
            }
            if (!more) break;
            va = load128(a.data() + i);
            vb = load128(b.data() + j);
        }
    }
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace lambda3::kernels::avx2

#endif  // LAMBDA3_HAVE_AVX2_KERNELS
