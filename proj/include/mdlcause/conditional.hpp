#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "mdlcause/complexity.hpp"

namespace mdlcause {

struct BalanceStep {
    int i = 0;                       // bin receiving counts (deficit side)
    int j = 0;                       // bin giving counts (surplus side)
    std::int64_t transferred = 0;
};

// Record of the count-balancing loop morphing X's histogram into Y's.
struct BalanceTrace {
    std::vector<BalanceStep> steps;
    double step_cost = 0.0;                  // 1 + log2(b) bits per step
    std::vector<std::int64_t> final_counts;  // equals Y's counts bin-for-bin
};

// Runs the balancing loop on raw count vectors. Policy: pick the bin with
// the largest deficit (counts_y[i] - counts_x[i]) and the bin with the
// largest surplus, smaller index on ties, and transfer the smaller of the
// two magnitudes. Both vectors must share length and total.
BalanceTrace balance_counts(std::vector<std::int64_t> counts_x,
                            const std::vector<std::int64_t>& counts_y);

struct ConditionalEstimate {
    double raw_conditional = 0.0;
    double capped_conditional = 0.0;  // min(raw, unconditional K of x, same accounting)
    BalanceTrace balance;
    int bin_count_used = 0;           // y's optimal uniform bin count
    bool error_included = false;
};

// K(x | y): rebins x with y's optimal uniform bin count, balances x's counts
// into y's (1 + log2(b) bits per step), then codes each point of x with the
// Shannon code lengths of the balanced counts. include_error false is the
// inference mode; true adds the clamped per-point deviation cost. The capped
// value compares against x_estimate under the matching accounting mode.
ConditionalEstimate conditional_k(const NormalizedSeries& x, const NormalizedSeries& y,
                                  const ComplexityEstimate& y_estimate,
                                  const ComplexityEstimate& x_estimate,
                                  bool include_error);

// CSV rows (step, i, j, transferred).
void write_balance_trace_csv(std::ostream& out, const BalanceTrace& trace);

}  // namespace mdlcause
