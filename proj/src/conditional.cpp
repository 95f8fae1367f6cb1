#include "mdlcause/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mdlcause {

BalanceTrace balance_counts(std::vector<std::int64_t> counts_x,
                            const std::vector<std::int64_t>& counts_y) {
    if (counts_x.size() != counts_y.size()) {
        throw error(errc::paired_data, "count vectors must have the same number of bins");
    }
    const auto total_x = std::accumulate(counts_x.begin(), counts_x.end(), std::int64_t{0});
    const auto total_y = std::accumulate(counts_y.begin(), counts_y.end(), std::int64_t{0});
    if (total_x != total_y) {
        throw error(errc::paired_data, "count vectors must share the same total");
    }
    const int b = static_cast<int>(counts_x.size());

    BalanceTrace trace;
    trace.step_cost = 1.0 + std::log2(static_cast<double>(b));
    while (true) {
        int deficit_bin = -1;
        int surplus_bin = -1;
        std::int64_t deficit = 0;
        std::int64_t surplus = 0;
        for (int k = 0; k < b; ++k) {
            const std::int64_t diff = counts_y[k] - counts_x[k];
            if (diff > deficit) {
                deficit = diff;
                deficit_bin = k;
            } else if (-diff > surplus) {
                surplus = -diff;
                surplus_bin = k;
            }
        }
        if (deficit_bin < 0 || surplus_bin < 0) {
            break;
        }
        const std::int64_t transferred = std::min(deficit, surplus);
        counts_x[deficit_bin] += transferred;
        counts_x[surplus_bin] -= transferred;
        trace.steps.push_back({deficit_bin, surplus_bin, transferred});
    }
    trace.final_counts = std::move(counts_x);
    return trace;
}

ConditionalEstimate conditional_k(const NormalizedSeries& x, const NormalizedSeries& y,
                                  const ComplexityEstimate& y_estimate,
                                  const ComplexityEstimate& x_estimate,
                                  bool include_error) {
    if (x.n() != y.n()) {
        throw error(errc::paired_data,
                    "paired series differ in length: " + std::to_string(x.n()) + " vs " +
                        std::to_string(y.n()));
    }
    if (y_estimate.optimal_binning.kind != BinningKind::uniform) {
        throw error(errc::contract_violation,
                    "conditional estimate requires a uniform estimate of the conditioning series");
    }
    const int b = y_estimate.optimal_binning.bin_count();
    if (b < 1) {
        throw error(errc::contract_violation, "conditioning estimate has no bins");
    }

    const Binning x_binning = make_uniform_binning(x, b);
    BalanceTrace balance = balance_counts(x_binning.counts, y_estimate.optimal_binning.counts);

    const auto n = static_cast<std::int64_t>(x.n());
    std::vector<int> balanced_code_lengths(b, 0);
    for (int k = 0; k < b; ++k) {
        // A balanced-away bin can still hold points of x; code them as if one
        // count remained so every point stays codable.
        const std::int64_t coded = std::max<std::int64_t>(balance.final_counts[k], 1);
        balanced_code_lengths[k] = shannon_code_length(coded, n);
    }

    ConditionalEstimate estimate;
    estimate.bin_count_used = b;
    estimate.error_included = include_error;

    double bits = static_cast<double>(balance.steps.size()) * 0.0;
    for (std::size_t s = 0; s < balance.steps.size(); ++s) {
        bits += balance.step_cost;
    }
    for (std::size_t k = 0; k < x.n(); ++k) {
        const int idx = bin_index(x_binning, x.values[k]);
        bits += std::log2(static_cast<double>(balanced_code_lengths[idx]));
        if (include_error) {
            const double deviation = std::abs(x.values[k] - x_binning.means[idx]);
            bits += std::clamp(std::log2(deviation), kErrorCostFloor, kErrorCostCeiling);
        }
    }
    estimate.raw_conditional = bits;
    const double unconditional =
        include_error ? x_estimate.k_value : x_estimate.k_value_no_error;
    estimate.capped_conditional = std::min(bits, unconditional);
    estimate.balance = std::move(balance);
    return estimate;
}

void write_balance_trace_csv(std::ostream& out, const BalanceTrace& trace) {
    out << "step,i,j,transferred\n";
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        out << s << ',' << trace.steps[s].i << ',' << trace.steps[s].j << ','
            << trace.steps[s].transferred << '\n';
    }
}

}  // namespace mdlcause
