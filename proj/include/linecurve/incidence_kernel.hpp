#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace linecurve {

// Pair-scan incidence counting: #{(i,j) : ys[i] == a_j * xs[i] + b_j}.
// One scalar reference kernel plus SIMD variants, selected at runtime and
// required to agree exactly. The narrow kernels additionally require
// |x|,|a| < 2^31 and |b| <= 2^62 so every a*x+b fits in int64; wider
// inputs always take the scalar __int128 path.
enum class IncidenceBackend { Auto, Scalar, Avx2, Neon };

std::string to_string(IncidenceBackend b);

// Backend Auto resolves to at runtime (CPU detection).
IncidenceBackend resolve_incidence_backend(IncidenceBackend requested);

// Scalar reference kernel, exact for all int64 inputs (__int128 evaluate).
std::uint64_t count_incidences_scalar(std::span<const std::int64_t> xs,
                                      std::span<const std::int64_t> ys,
                                      std::span<const std::int64_t> as,
                                      std::span<const std::int64_t> bs);

#if defined(__x86_64__) || defined(_M_X64)
// AVX2 kernel; preconditions as above (checked by the dispatcher).
std::uint64_t count_incidences_avx2(std::span<const std::int64_t> xs,
                                    std::span<const std::int64_t> ys,
                                    std::span<const std::int64_t> as,
                                    std::span<const std::int64_t> bs);
#endif
#if defined(__aarch64__)
std::uint64_t count_incidences_neon(std::span<const std::int64_t> xs,
                                    std::span<const std::int64_t> ys,
                                    std::span<const std::int64_t> as,
                                    std::span<const std::int64_t> bs);
#endif

// Dispatching entry point: picks the requested (or detected) kernel, and
// falls back to scalar whenever the narrow-range precondition fails.
std::uint64_t count_incidences_kernel(std::span<const std::int64_t> xs,
                                      std::span<const std::int64_t> ys,
                                      std::span<const std::int64_t> as,
                                      std::span<const std::int64_t> bs,
                                      IncidenceBackend backend = IncidenceBackend::Auto);

} // namespace linecurve
