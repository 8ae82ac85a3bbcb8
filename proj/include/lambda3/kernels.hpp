#pragma once

// Integer reduction kernels behind the metrics hot loops: BFS distance sums,
// Pearson moment accumulation, neighbor-degree gathers and sorted-adjacency
// intersections (triangle counting).
//
// Every kernel has a scalar reference implementation and an AVX2 variant;
// the active variant is chosen once at runtime from CPU capabilities (the
// LAMBDA3_FORCE_SCALAR=1 environment variable pins the scalar path). All
// kernels are exact integer arithmetic, so every variant returns bit-identical
// results — tests/test_kernels.cpp enforces the equivalence. Non-x86 builds
// fall back to the scalar path.
//
// Overflow contract (callers enforce, kernels assume):
//   sum_u32 / sum_gather_u32 : count * max_value < 2^64
//   pair_moments_u32         : values < 2^21 and count <= 2^21, so every
//                              product < 2^42 and each total < 2^63
//   intersect_count_u32      : inputs strictly ascending (no duplicates)

#include <cstdint>
#include <span>

namespace lambda3::kernels {

struct PairMoments {
    std::uint64_t count = 0;
    std::uint64_t sum_x = 0;
    std::uint64_t sum_y = 0;
    std::uint64_t sum_xx = 0;
    std::uint64_t sum_yy = 0;
    std::uint64_t sum_xy = 0;

    bool operator==(const PairMoments&) const = default;
};

/// Largest value/count for which pair_moments_u32 is exact.
inline constexpr std::uint32_t kPairMomentsValueLimit = 1u << 21;

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

/// Variant selected for this process (CPU detection + env override).
Isa active_isa();

/// Pin a variant; used by tests and the CLI --force-scalar escape hatch.
/// Requesting an unsupported ISA throws.
void force_isa(Isa isa);

std::uint64_t sum_u32(std::span<const std::uint32_t> values);
std::uint32_t max_u32(std::span<const std::uint32_t> values);  // 0 on empty
PairMoments pair_moments_u32(std::span<const std::uint32_t> x,
                             std::span<const std::uint32_t> y);
/// Sum of values[indices[i]] over all i.
std::uint64_t sum_gather_u32(std::span<const std::uint32_t> values,
                             std::span<const std::uint32_t> indices);
/// |a ∩ b| for strictly ascending u32 sequences.
std::uint64_t intersect_count_u32(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b);

// Reference implementations (always available; the oracle side of the
// equivalence tests).
namespace scalar {
std::uint64_t sum_u32(std::span<const std::uint32_t> values);
std::uint32_t max_u32(std::span<const std::uint32_t> values);
PairMoments pair_moments_u32(std::span<const std::uint32_t> x,
                             std::span<const std::uint32_t> y);
std::uint64_t sum_gather_u32(std::span<const std::uint32_t> values,
                             std::span<const std::uint32_t> indices);
std::uint64_t intersect_count_u32(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define LAMBDA3_HAVE_AVX2_KERNELS 1
namespace avx2 {
bool supported();  // CPUID check, independent of what this binary was built with
std::uint64_t sum_u32(std::span<const std::uint32_t> values);
std::uint32_t max_u32(std::span<const std::uint32_t> values);
PairMoments pair_moments_u32(std::span<const std::uint32_t> x,
                             std::span<const std::uint32_t> y);
std::uint64_t sum_gather_u32(std::span<const std::uint32_t> values,
                             std::span<const std::uint32_t> indices);
std::uint64_t intersect_count_u32(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b);
}  // namespace avx2
#endif

}  // namespace lambda3::kernels
