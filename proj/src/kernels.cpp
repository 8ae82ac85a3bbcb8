#include "lambda3/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "lambda3/errors.hpp"

namespace lambda3::kernels {

namespace {

Isa detect() {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    const char* force = std::getenv("LAMBDA3_FORCE_SCALAR");
    if (force && force[0] == '1') return Isa::scalar;
    if (avx2::supported()) return Isa::avx2;
#endif
    return Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::scalar: break;
    }
    return "scalar";
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    if (isa == Isa::avx2 && !avx2::supported())
        throw invalid_parameter("force_isa: avx2 not supported on this CPU");
#else
    if (isa != Isa::scalar)
        throw invalid_parameter("force_isa: only the scalar variant is available");
#endif
    current().store(isa, std::memory_order_relaxed);
}

std::uint64_t sum_u32(std::span<const std::uint32_t> values) {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2) return avx2::sum_u32(values);
#endif
    return scalar::sum_u32(values);
}

std::uint32_t max_u32(std::span<const std::uint32_t> values) {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2) return avx2::max_u32(values);
#endif
    return scalar::max_u32(values);
}

PairMoments pair_moments_u32(std::span<const std::uint32_t> x,
                             std::span<const std::uint32_t> y) {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2) return avx2::pair_moments_u32(x, y);
#endif
    return scalar::pair_moments_u32(x, y);
}

std::uint64_t sum_gather_u32(std::span<const std::uint32_t> values,
                             std::span<const std::uint32_t> indices) {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2) return avx2::sum_gather_u32(values, indices);
#endif
    return scalar::sum_gather_u32(values, indices);
}

std::uint64_t intersect_count_u32(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b) {
#if defined(LAMBDA3_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2) return avx2::intersect_count_u32(a, b);
#endif
    return scalar::intersect_count_u32(a, b);
}

}  // namespace lambda3::kernels
