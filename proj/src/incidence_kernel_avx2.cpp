// AVX2 variant of the pair-scan incidence kernel. Translation unit is
// compiled with -mavx2; callers reach it through the runtime dispatcher
// only after the CPU check and the narrow-range precondition (|x|,|a| <
// 2^31, |b| <= 2^62), under which a*x+b is exact in the 64-bit lanes.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "linecurve/incidence_kernel.hpp"

namespace linecurve {

std::uint64_t count_incidences_avx2(std::span<const std::int64_t> xs,
                                    std::span<const std::int64_t> ys,
                                    std::span<const std::int64_t> as,
                                    std::span<const std::int64_t> bs) {
    const size_t n = xs.size();
    const size_t vec_end = n - n % 4;
    std::uint64_t total = 0;

    for (size_t j = 0; j < as.size(); ++j) {
        const __m256i a = _mm256_set1_epi64x(as[j]);
        const __m256i b = _mm256_set1_epi64x(bs[j]);
        // Per-lane match counters; cmpeq yields -1 per hit, so subtract.
        __m256i acc = _mm256_setzero_si256();
        for (size_t i = 0; i < vec_end; i += 4) {
            __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&xs[i]));
            __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&ys[i]));
            // 32x32 -> 64 signed multiply of the low halves; exact because
            // |a|, |x| < 2^31.
            __m256i ax = _mm256_mul_epi32(a, x);
            __m256i lhs = _mm256_add_epi64(ax, b);
            acc = _mm256_sub_epi64(acc, _mm256_cmpeq_epi64(lhs, y));
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        total += static_cast<std::uint64_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
        for (size_t i = vec_end; i < n; ++i)
            total += (ys[i] == as[j] * xs[i] + bs[j]);
    }
    return total;
}

} // namespace linecurve

#endif
