#include "linecurve/incidence_kernel.hpp"

#include <cstdlib>

namespace linecurve {

std::string to_string(IncidenceBackend b) {
    switch (b) {
        case IncidenceBackend::Auto: return "auto";
        case IncidenceBackend::Scalar: return "scalar";
        case IncidenceBackend::Avx2: return "avx2";
        case IncidenceBackend::Neon: return "neon";
    }
    return "?";
}

IncidenceBackend resolve_incidence_backend(IncidenceBackend requested) {
    if (requested != IncidenceBackend::Auto) return requested;
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return IncidenceBackend::Avx2;
#elif defined(__aarch64__)
    return IncidenceBackend::Neon;
#endif
    return IncidenceBackend::Scalar;
}

std::uint64_t count_incidences_scalar(std::span<const std::int64_t> xs,
                                      std::span<const std::int64_t> ys,
                                      std::span<const std::int64_t> as,
                                      std::span<const std::int64_t> bs) {
    std::uint64_t count = 0;
    for (size_t j = 0; j < as.size(); ++j) {
        const __int128 a = as[j];
        const __int128 b = bs[j];
        for (size_t i = 0; i < xs.size(); ++i)
            count += (__int128(ys[i]) == a * xs[i] + b);
    }
    return count;
}

namespace {

bool narrow_ok(std::span<const std::int64_t> xs, std::span<const std::int64_t> as,
               std::span<const std::int64_t> bs) {
    constexpr std::int64_t lim31 = std::int64_t{1} << 31;
    constexpr std::int64_t lim62 = std::int64_t{1} << 62;
    for (auto v : xs)
        if (v <= -lim31 || v >= lim31) return false;
    for (auto v : as)
        if (v <= -lim31 || v >= lim31) return false;
    for (auto v : bs)
        if (v <= -lim62 || v >= lim62) return false;
    return true;
}

} // namespace

std::uint64_t count_incidences_kernel(std::span<const std::int64_t> xs,
                                      std::span<const std::int64_t> ys,
                                      std::span<const std::int64_t> as,
                                      std::span<const std::int64_t> bs,
                                      IncidenceBackend backend) {
    backend = resolve_incidence_backend(backend);
    if (backend != IncidenceBackend::Scalar && !narrow_ok(xs, as, bs))
        backend = IncidenceBackend::Scalar;
    switch (backend) {
#if defined(__x86_64__) || defined(_M_X64)
        case IncidenceBackend::Avx2:
            if (__builtin_cpu_supports("avx2"))
                return count_incidences_avx2(xs, ys, as, bs);
            break;
#endif
#if defined(__aarch64__)
        case IncidenceBackend::Neon:
            return count_incidences_neon(xs, ys, as, bs);
#endif
        default:
            break;
    }
    return count_incidences_scalar(xs, ys, as, bs);
}

} // namespace linecurve
