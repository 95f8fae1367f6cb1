#pragma once

#include <span>
#include <string>
#include <vector>

#include "mdlcause/errors.hpp"

namespace mdlcause {

// A column of points affinely rescaled to [0, 100]. Order of values is
// preserved from ingestion so that x_i stays paired with y_i.
struct NormalizedSeries {
    std::vector<double> values;
    std::string source_label;

    std::size_t n() const noexcept { return values.size(); }
};

// Affine map v -> 100 * (v - min) / (max - min). Order-preserving; min maps
// to 0 and max to 100 exactly. Already-normalized input is returned
// unchanged, so the map is idempotent. Throws degenerate_column for empty or
// constant input.
NormalizedSeries normalize(std::span<const double> raw, std::string source_label);

// Wraps values that are already in [0, 100] without rescaling. Throws
// invalid_parameter if empty or out of range.
NormalizedSeries make_normalized(std::vector<double> values, std::string source_label);

// Maps each label to its 0-based rank in `ordering`, as a real. Unseen
// labels raise an encoding error naming the label.
std::vector<double> ordinal_encode(std::span<const std::string> column,
                                   std::span<const std::string> ordering);

}  // namespace mdlcause
