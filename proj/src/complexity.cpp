#include "mdlcause/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mdlcause {

int resolve_max_bins(const NormalizedSeries& series, std::optional<int> max_bins) {
    if (!max_bins.has_value()) {
        return static_cast<int>(
            std::min<std::size_t>(series.n(), kDefaultMaxBinsLimit));
    }
    if (*max_bins < 1) {
        throw error(errc::invalid_parameter, "max_bins must be at least 1");
    }
    return *max_bins;
}

CostBreakdown complexity(const NormalizedSeries& series, const Binning& binning) {
    const int b = binning.bin_count();
    const auto n = static_cast<std::int64_t>(series.n());
    if (b < 1 || binning.total_count() != n) {
        throw error(errc::contract_violation, "binning was not built over this series");
    }

    std::vector<std::int64_t> recount(b, 0);
    std::vector<int> indices;
    indices.reserve(series.n());
    for (double p : series.values) {
        const int idx = bin_index(binning, p);
        ++recount[idx];
        indices.push_back(idx);
    }
    if (recount != binning.counts) {
        throw error(errc::contract_violation,
                    "bin counts do not match a recount of the series");
    }

    CostBreakdown cost;
    for (int i = 0; i < b; ++i) {
        cost.model_cost += 1.0;
        if (binning.counts[i] > 0) {
            cost.model_cost += std::log2(static_cast<double>(binning.code_lengths[i]));
        }
    }
    for (std::size_t k = 0; k < series.n(); ++k) {
        const int idx = indices[k];
        cost.code_length_cost += std::log2(static_cast<double>(binning.code_lengths[idx]));
        const double deviation = std::abs(series.values[k] - binning.means[idx]);
        cost.error_cost +=
            std::clamp(std::log2(deviation), kErrorCostFloor, kErrorCostCeiling);
    }
    cost.total = cost.model_cost + cost.code_length_cost + cost.error_cost;
    return cost;
}

std::vector<GreedyStep> greedy_refine_by_complexity(const NormalizedSeries& series,
                                                    int max_bins, int candidate_budget) {
    return greedy_refine(series, max_bins, candidate_budget,
                         [](const NormalizedSeries& s, const Binning& binning) {
                             return complexity(s, binning).total;
                         });
}

ComplexityEstimate estimate_k(const NormalizedSeries& series, Strategy strategy,
                              std::optional<int> max_bins, int greedy_candidates) {
    const int limit = resolve_max_bins(series, max_bins);

    ComplexityEstimate estimate;
    int best_index = -1;
    if (strategy == Strategy::uniform) {
        estimate.trace.reserve(limit);
        for (int b = 1; b <= limit; ++b) {
            const CostBreakdown cost =
                complexity(series, make_uniform_binning(series, b, limit));
            estimate.trace.push_back({b, cost});
            if (best_index < 0 || cost.total < estimate.trace[best_index].cost.total) {
                best_index = static_cast<int>(estimate.trace.size()) - 1;
            }
        }
        estimate.optimal_binning =
            make_uniform_binning(series, estimate.trace[best_index].bin_count, limit);
    } else {
        auto trajectory = greedy_refine_by_complexity(series, limit, greedy_candidates);
        estimate.trace.reserve(trajectory.size());
        for (const auto& step : trajectory) {
            const CostBreakdown cost = complexity(series, step.binning);
            estimate.trace.push_back({step.binning.bin_count(), cost});
            if (best_index < 0 || cost.total < estimate.trace[best_index].cost.total) {
                best_index = static_cast<int>(estimate.trace.size()) - 1;
                estimate.optimal_binning = step.binning;
            }
        }
    }
    estimate.k_value = estimate.trace[best_index].cost.total;
    estimate.k_value_no_error = estimate.trace[best_index].cost.total_without_error();
    return estimate;
}

void write_cost_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace) {
    out << "bin_count,model_cost,code_length_cost,error_cost,total\n";
    out.precision(17);
    for (const auto& entry : trace) {
        out << entry.bin_count << ',' << entry.cost.model_cost << ','
            << entry.cost.code_length_cost << ',' << entry.cost.error_cost << ','
            << entry.cost.total << '\n';
    }
}

}  // namespace mdlcause
