#include "lambda3/kernels.hpp"

#include <cassert>

namespace lambda3::kernels::scalar {

std::uint64_t sum_u32(std::span<const std::uint32_t> values) {
    std::uint64_t acc = 0;
    for (std::uint32_t v : values) acc += v;
    return acc;
}

std::uint32_t max_u32(std::span<const std::uint32_t> values) {
    std::uint32_t best = 0;
    for (std::uint32_t v : values)
        if (v > best) best = v;
    return best;
}

PairMoments pair_moments_u32(std::span<const std::uint32_t> x,
                             std::span<const std::uint32_t> y) {
    assert(x.size() == y.size());
    PairMoments m;
    m.count = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint64_t a = x[i];
        const std::uint64_t b = y[i];
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
    std::uint64_t acc = 0;
    for (std::uint32_t idx : indices) acc += values[idx];
    return acc;
}

std::uint64_t intersect_count_u32(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b) {
    std::uint64_t count = 0;
    std::size_t i = 0, j = 0;
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

}  // namespace lambda3::kernels::scalar
