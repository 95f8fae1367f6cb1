#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "mdlcause/binning.hpp"

namespace mdlcause {

// Three-part description cost of a series under one binning, in bits.
//   model: 1 per bin, plus log2 of the Shannon code length of each coded bin
//   code length: log2 of the point's bin code length, per point
//   error: log2 |p - mean(bin_p)| clamped to [1, 7], per point
struct CostBreakdown {
    double model_cost = 0.0;
    double code_length_cost = 0.0;
    double error_cost = 0.0;
    double total = 0.0;

    double total_without_error() const noexcept { return model_cost + code_length_cost; }
};

struct TraceEntry {
    int bin_count = 0;
    CostBreakdown cost;
};

enum class Strategy { uniform, greedy };

struct ComplexityEstimate {
    double k_value = 0.0;           // min total over the trace
    double k_value_no_error = 0.0;  // same minimizing binning, error cost excluded
    Binning optimal_binning;
    std::vector<TraceEntry> trace;
};

// Per-point error clamp: normalization to [0,100] bounds each term below by
// 1 and above by ceil(log2(100)) = 7.
inline constexpr double kErrorCostFloor = 1.0;
inline constexpr double kErrorCostCeiling = 7.0;

inline constexpr int kDefaultMaxBinsLimit = 200;
inline constexpr int kDefaultGreedyCandidates = 128;

// max_bins used when the caller leaves it unset: min(n, 200).
int resolve_max_bins(const NormalizedSeries& series, std::optional<int> max_bins);

// Description cost of `series` under `binning`. The binning must have been
// built over this series; a count mismatch against a recount is a contract
// violation.
CostBreakdown complexity(const NormalizedSeries& series, const Binning& binning);

// K estimate: minimum complexity over the strategy's candidate binnings with
// the full trace retained. Uniform scans b in [1, max_bins]; greedy follows
// the refinement trajectory. Ties break toward the smaller bin count.
ComplexityEstimate estimate_k(const NormalizedSeries& series, Strategy strategy,
                              std::optional<int> max_bins = std::nullopt,
                              int greedy_candidates = kDefaultGreedyCandidates);

// greedy_refine wired to the total-complexity functional above.
std::vector<GreedyStep> greedy_refine_by_complexity(const NormalizedSeries& series,
                                                    int max_bins,
                                                    int candidate_budget =
                                                        kDefaultGreedyCandidates);

// CSV rows (bin_count, model_cost, code_length_cost, error_cost, total).
void write_cost_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace);

}  // namespace mdlcause
