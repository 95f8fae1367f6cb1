#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mdlcause/series.hpp"

namespace mdlcause {

enum class BinningKind { uniform, greedy };

// An ordered partition of [0, 100] with per-bin statistics. Empty bins carry
// no Shannon code (code_lengths 0) and a NaN mean; they still count toward
// the bin total in the model cost.
struct Binning {
    BinningKind kind = BinningKind::uniform;
    std::vector<double> boundaries;       // b + 1 strictly increasing reals spanning [0,100]
    std::vector<std::int64_t> counts;     // b entries summing to n
    std::vector<double> means;            // b entries; NaN marks an empty bin
    std::vector<int> code_lengths;        // b entries; 0 marks an empty bin

    int bin_count() const noexcept { return static_cast<int>(counts.size()); }
    std::int64_t total_count() const noexcept;
};

inline constexpr int kDefaultMaxBinsCap = 1 << 16;

// max(1, ceil(-log2(count/n))) computed in exact integer arithmetic.
// Requesting a code for an empty bin is a contract violation.
int shannon_code_length(std::int64_t count, std::int64_t n);

// Bin index of point p. Uniform binnings use floor(p / width) clamped to the
// last bin (so p = 100 lands in bin b-1); greedy binnings use half-open
// intervals with the last bin closed.
int bin_index(const Binning& binning, double p);

// b equal-width bins over [0,100] with counts, means, and Shannon code
// lengths filled in. b outside [1, max_bins] is an invalid parameter.
Binning make_uniform_binning(const NormalizedSeries& series, int bins,
                             int max_bins = kDefaultMaxBinsCap);

// Builds a Binning of the given kind from explicit boundaries (strictly
// increasing, first 0, last 100).
Binning make_binning_from_boundaries(const NormalizedSeries& series, BinningKind kind,
                                     std::vector<double> boundaries);

// Cost functional used to rank candidate refinements; the standard choice is
// the total complexity from estimate-side code (see greedy_refine_by_complexity).
using BinningCost = std::function<double(const NormalizedSeries&, const Binning&)>;

struct GreedyStep {
    Binning binning;
    double total_cost = 0.0;
};

// Starts from a single bin spanning [0,100] and repeatedly inserts the
// single boundary that minimizes `cost`, recording the trajectory until
// max_bins bins are reached or no admissible split remains. Candidate
// boundaries are midpoints between consecutive distinct values inside a bin;
// when a step has more than candidate_budget candidates they are subsampled
// evenly by rank. Ties go to the leftmost candidate.
std::vector<GreedyStep> greedy_refine(const NormalizedSeries& series, int max_bins,
                                      int candidate_budget, const BinningCost& cost);

}  // namespace mdlcause
