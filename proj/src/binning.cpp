#include "mdlcause/binning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace mdlcause {

std::int64_t Binning::total_count() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

int shannon_code_length(std::int64_t count, std::int64_t n) {
    if (count <= 0 || n <= 0 || count > n) {
        throw error(errc::contract_violation,
                    "shannon code length requested for count " + std::to_string(count) +
                        " of " + std::to_string(n));
    }
    // Smallest L >= 1 with count * 2^L >= n, i.e. max(1, ceil(log2(n/count))).
    int length = 1;
    while ((count << length) < n) {
        ++length;
    }
    return length;
}

int bin_index(const Binning& binning, double p) {
    const int b = binning.bin_count();
    if (binning.kind == BinningKind::uniform) {
        const double width = 100.0 / b;
        int idx = static_cast<int>(std::floor(p / width));
        return std::clamp(idx, 0, b - 1);
    }
    auto it = std::upper_bound(binning.boundaries.begin(), binning.boundaries.end(), p);
    int idx = static_cast<int>(it - binning.boundaries.begin()) - 1;
    return std::clamp(idx, 0, b - 1);
}

namespace {

void fill_statistics(const NormalizedSeries& series, Binning& binning) {
    const int b = binning.bin_count();
    const auto n = static_cast<std::int64_t>(series.n());
    std::vector<double> sums(b, 0.0);
    for (double p : series.values) {
        const int idx = bin_index(binning, p);
        ++binning.counts[idx];
        sums[idx] += p;
    }
    binning.means.assign(b, std::numeric_limits<double>::quiet_NaN());
    binning.code_lengths.assign(b, 0);
    for (int i = 0; i < b; ++i) {
        if (binning.counts[i] > 0) {
            binning.means[i] = sums[i] / static_cast<double>(binning.counts[i]);
            binning.code_lengths[i] = shannon_code_length(binning.counts[i], n);
        }
    }
}

}  // namespace

Binning make_uniform_binning(const NormalizedSeries& series, int bins, int max_bins) {
    if (bins < 1 || bins > max_bins) {
        throw error(errc::invalid_parameter,
                    "bin count " + std::to_string(bins) + " outside [1, " +
                        std::to_string(max_bins) + "]");
    }
    Binning binning;
    binning.kind = BinningKind::uniform;
    binning.boundaries.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) {
        binning.boundaries[i] = (100.0 * i) / bins;
    }
    binning.counts.assign(bins, 0);
    fill_statistics(series, binning);
    return binning;
}

Binning make_binning_from_boundaries(const NormalizedSeries& series, BinningKind kind,
                                     std::vector<double> boundaries) {
    if (boundaries.size() < 2 || boundaries.front() != 0.0 || boundaries.back() != 100.0 ||
        !std::is_sorted(boundaries.begin(), boundaries.end()) ||
        std::adjacent_find(boundaries.begin(), boundaries.end()) != boundaries.end()) {
        throw error(errc::invalid_parameter,
                    "bin boundaries must be strictly increasing and span [0,100]");
    }
    Binning binning;
    binning.kind = kind;
    binning.boundaries = std::move(boundaries);
    binning.counts.assign(binning.boundaries.size() - 1, 0);
    fill_statistics(series, binning);
    return binning;
}

namespace {

// Midpoints between consecutive distinct sorted values that fall strictly
// inside one bin of `current`. Naturally sorted ascending.
std::vector<double> split_candidates(const std::vector<double>& sorted_distinct,
                                     const Binning& current) {
    std::vector<double> candidates;
    for (std::size_t i = 0; i + 1 < sorted_distinct.size(); ++i) {
        const double lo = sorted_distinct[i];
        const double hi = sorted_distinct[i + 1];
        if (bin_index(current, lo) != bin_index(current, hi)) {
            continue;
        }
        const double mid = lo + (hi - lo) / 2.0;
        if (mid > lo && mid < hi) {
            candidates.push_back(mid);
        }
    }
    return candidates;
}

std::vector<double> subsample_by_rank(const std::vector<double>& candidates, int budget) {
    if (static_cast<int>(candidates.size()) <= budget) {
        return candidates;
    }
    std::vector<double> picked;
    picked.reserve(budget);
    const auto total = static_cast<std::int64_t>(candidates.size());
    for (int k = 0; k < budget; ++k) {
        picked.push_back(candidates[static_cast<std::size_t>(k * total / budget)]);
    }
    return picked;
}

}  // namespace

std::vector<GreedyStep> greedy_refine(const NormalizedSeries& series, int max_bins,
                                      int candidate_budget, const BinningCost& cost) {
    if (max_bins < 1) {
        throw error(errc::invalid_parameter, "max_bins must be at least 1");
    }
    if (candidate_budget < 1) {
        throw error(errc::invalid_parameter, "candidate budget must be at least 1");
    }
    if (!cost) {
        throw error(errc::invalid_parameter, "greedy refinement needs a cost functional");
    }

    std::vector<double> sorted_distinct = series.values;
    std::sort(sorted_distinct.begin(), sorted_distinct.end());
    sorted_distinct.erase(std::unique(sorted_distinct.begin(), sorted_distinct.end()),
                          sorted_distinct.end());

    std::vector<GreedyStep> trajectory;
    Binning current = make_binning_from_boundaries(series, BinningKind::greedy, {0.0, 100.0});
    trajectory.push_back({current, cost(series, current)});

    while (current.bin_count() < max_bins) {
        const auto candidates =
            subsample_by_rank(split_candidates(sorted_distinct, current), candidate_budget);
        if (candidates.empty()) {
            break;
        }
        bool have_best = false;
        double best_cost = 0.0;
        Binning best_binning;
        for (double boundary : candidates) {
            std::vector<double> refined = current.boundaries;
            refined.insert(std::upper_bound(refined.begin(), refined.end(), boundary),
                           boundary);
            Binning candidate =
                make_binning_from_boundaries(series, BinningKind::greedy, std::move(refined));
            const double candidate_cost = cost(series, candidate);
            if (!have_best || candidate_cost < best_cost) {
                have_best = true;
                best_cost = candidate_cost;
                best_binning = std::move(candidate);
            }
        }
        current = std::move(best_binning);
        trajectory.push_back({current, best_cost});
    }
    return trajectory;
}

}  // namespace mdlcause
