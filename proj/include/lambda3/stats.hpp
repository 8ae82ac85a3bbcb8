#pragma once

// Small statistics toolbox: Poisson pmf, chi-square goodness-of-fit with
// tail pooling, sample mean/sd, and exact-integer Pearson correlation built
// on the reduction kernels.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lambda3/kernels.hpp"

namespace lambda3::stats {

/// Poisson probability mass at k for the given rate (rate 0 puts all mass at 0).
double poisson_pmf(std::uint32_t k, double lambda);

/// Upper tail P(X >= statistic) for a chi-square distribution with dof
/// degrees of freedom.
double chi_square_survival(double statistic, std::uint32_t dof);

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;  // n-1 denominator; 0 when fewer than 2 samples
};

MeanSd mean_sd(std::span<const double> values);

/// Pearson correlation from exact integer moments; empty when fewer than two
/// samples or either variance is zero.
std::optional<double> pearson(const kernels::PairMoments& m);

/// Pearson over two u32 vectors. Uses the SIMD moment kernel when the
/// exactness contract holds, otherwise an exact 128-bit scalar path.
std::optional<double> pearson_u32(std::span<const std::uint32_t> x,
                                  std::span<const std::uint32_t> y);

struct ChiSquareBin {
    std::uint32_t k_begin = 0;  // inclusive
    std::uint32_t k_end = 0;    // inclusive; bins pool adjacent k values
    double observed = 0.0;
    double expected = 0.0;
};

struct ChiSquareResult {
    double statistic = 0.0;
    std::uint32_t dof = 0;
    double p_value = 1.0;
    std::vector<ChiSquareBin> bins;
};

/// Goodness-of-fit of observed counts (index = k) against a discrete pmf.
/// Adjacent bins are pooled until each expected count reaches at least 5;
/// the tail mass beyond the largest observed k is folded into the last bin.
/// estimated_parameters reduces the degrees of freedom (1 when the rate was
/// fitted from the same data).
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               const std::function<double(std::uint32_t)>& pmf,
                               std::uint32_t estimated_parameters);

}  // namespace lambda3::stats
