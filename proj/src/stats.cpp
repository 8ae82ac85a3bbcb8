#include "lambda3/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "lambda3/errors.hpp"

namespace lambda3::stats {

double poisson_pmf(std::uint32_t k, double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw invalid_parameter("poisson_pmf: lambda must be finite and non-negative");
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(-lambda + k * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0));
}

double chi_square_survival(double statistic, std::uint32_t dof) {
    if (dof == 0) throw invalid_parameter("chi_square_survival: dof must be positive");
    if (statistic <= 0.0) return 1.0;
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

MeanSd mean_sd(std::span<const double> values) {
    MeanSd out;
    const std::size_t n = values.size();
    if (n == 0) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(n);
    if (n < 2) return out;
    double ss = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        ss += d * d;
    }
    out.sd = std::sqrt(ss / static_cast<double>(n - 1));
    return out;
}

std::optional<double> pearson(const kernels::PairMoments& m) {
    if (m.count < 2) return std::nullopt;
    using i128 = __int128;
    const i128 n = static_cast<i128>(m.count);
    const i128 cov = n * static_cast<i128>(m.sum_xy) -
                     static_cast<i128>(m.sum_x) * static_cast<i128>(m.sum_y);
    const i128 var_x = n * static_cast<i128>(m.sum_xx) -
                       static_cast<i128>(m.sum_x) * static_cast<i128>(m.sum_x);
    const i128 var_y = n * static_cast<i128>(m.sum_yy) -
                       static_cast<i128>(m.sum_y) * static_cast<i128>(m.sum_y);
    if (var_x == 0 || var_y == 0) return std::nullopt;
    const long double r = static_cast<long double>(cov) /
                          std::sqrt(static_cast<long double>(var_x) *
                                    static_cast<long double>(var_y));
    return static_cast<double>(r);
}

std::optional<double> pearson_u32(std::span<const std::uint32_t> x,
                                  std::span<const std::uint32_t> y) {
    if (x.size() != y.size()) throw invalid_parameter("pearson_u32: size mismatch");
    const bool in_contract = x.size() <= kernels::kPairMomentsValueLimit &&
                             kernels::max_u32(x) < kernels::kPairMomentsValueLimit &&
                             kernels::max_u32(y) < kernels::kPairMomentsValueLimit;
    if (in_contract) return pearson(kernels::pair_moments_u32(x, y));

    // Exact fallback for inputs beyond the u64 moment contract.
    using i128 = __int128;
    if (x.size() < 2) return std::nullopt;
    i128 sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const i128 a = x[i];
        const i128 b = y[i];
        sx += a;
        sy += b;
        sxx += a * a;
        syy += b * b;
        sxy += a * b;
    }
    const i128 n = static_cast<i128>(x.size());
    const i128 cov = n * sxy - sx * sy;
    const i128 var_x = n * sxx - sx * sx;
    const i128 var_y = n * syy - sy * sy;
    if (var_x == 0 || var_y == 0) return std::nullopt;
    const long double r = static_cast<long double>(cov) /
                          std::sqrt(static_cast<long double>(var_x) *
                                    static_cast<long double>(var_y));
    return static_cast<double>(r);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               const std::function<double(std::uint32_t)>& pmf,
                               std::uint32_t estimated_parameters) {
    if (observed.empty()) throw invalid_parameter("chi_square_gof: empty histogram");
    std::uint64_t total = 0;
    for (std::uint64_t c : observed) total += c;
    if (total == 0) throw invalid_parameter("chi_square_gof: histogram has no mass");

    const double totald = static_cast<double>(total);
    ChiSquareResult result;

    // Pool adjacent k until the expected count reaches 5.
    ChiSquareBin pending;
    bool pending_open = false;
    for (std::uint32_t k = 0; k < observed.size(); ++k) {
        if (!pending_open) {
            pending = ChiSquareBin{k, k, 0.0, 0.0};
            pending_open = true;
        }
        pending.k_end = k;
        pending.observed += static_cast<double>(observed[k]);
        pending.expected += totald * pmf(k);
        if (pending.expected >= 5.0) {
            result.bins.push_back(pending);
            pending_open = false;
        }
    }
    // Tail probability mass beyond the last observed k belongs to the final bin.
    double expected_so_far = pending_open ? pending.expected : 0.0;
    for (const ChiSquareBin& b : result.bins) expected_so_far += b.expected;
    const double tail = std::max(0.0, totald - expected_so_far);
    if (pending_open) {
        pending.expected += tail;
        if (!result.bins.empty() && pending.expected < 5.0) {
            result.bins.back().k_end = pending.k_end;
            result.bins.back().observed += pending.observed;
            result.bins.back().expected += pending.expected;
        } else {
            result.bins.push_back(pending);
        }
    } else if (!result.bins.empty()) {
        result.bins.back().expected += tail;
    }

    for (const ChiSquareBin& b : result.bins) {
        if (b.expected > 0.0) {
            const double d = b.observed - b.expected;
            result.statistic += d * d / b.expected;
        }
    }
    const std::uint32_t bins = static_cast<std::uint32_t>(result.bins.size());
    result.dof = bins > estimated_parameters + 1 ? bins - estimated_parameters - 1 : 1;
    result.p_value = chi_square_survival(result.statistic, result.dof);
    return result;
}

}  // namespace lambda3::stats
