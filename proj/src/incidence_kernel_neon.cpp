// NEON variant of the pair-scan incidence kernel (aarch64). Same
// preconditions as the AVX2 variant: |x|,|a| < 2^31 and |b| <= 2^62.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "linecurve/incidence_kernel.hpp"

namespace linecurve {

std::uint64_t count_incidences_neon(std::span<const std::int64_t> xs,
                                    std::span<const std::int64_t> ys,
                                    std::span<const std::int64_t> as,
                                    std::span<const std::int64_t> bs) {
    const size_t n = xs.size();
    const size_t vec_end = n - n % 2;
    std::uint64_t total = 0;

    for (size_t j = 0; j < as.size(); ++j) {
        const std::int64_t aj = as[j], bj = bs[j];
        const int32x2_t a32 = vdup_n_s32(static_cast<std::int32_t>(aj));
        const int64x2_t b = vdupq_n_s64(bj);
        uint64x2_t acc = vdupq_n_u64(0);
        for (size_t i = 0; i < vec_end; i += 2) {
            int64x2_t x = vld1q_s64(&xs[i]);
            int64x2_t y = vld1q_s64(&ys[i]);
            int32x2_t x32 = vmovn_s64(x); // exact: |x| < 2^31
            int64x2_t ax = vmull_s32(a32, x32);
            int64x2_t lhs = vaddq_s64(ax, b);
            uint64x2_t eq = vceqq_s64(lhs, y); // all-ones per hit
            acc = vsubq_u64(acc, eq);
        }
        total += vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
        for (size_t i = vec_end; i < n; ++i)
            total += (ys[i] == aj * xs[i] + bj);
    }
    return total;
}

} // namespace linecurve

#endif
