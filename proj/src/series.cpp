#include "mdlcause/series.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace mdlcause {

NormalizedSeries normalize(std::span<const double> raw, std::string source_label) {
    if (raw.empty()) {
        throw error(errc::degenerate_column,
                    "cannot normalize empty column '" + source_label + "'");
    }
    for (double v : raw) {
        if (!std::isfinite(v)) {
            throw error(errc::degenerate_column,
                        "non-finite value in column '" + source_label + "'");
        }
    }
    auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == hi) {
        throw error(errc::degenerate_column,
                    "constant column '" + source_label + "' cannot be scaled");
    }

    NormalizedSeries out;
    out.source_label = std::move(source_label);
    out.values.reserve(raw.size());
    if (lo == 0.0 && hi == 100.0) {
        out.values.assign(raw.begin(), raw.end());
        return out;
    }
    const double span = hi - lo;
    for (double v : raw) {
        double scaled;
        if (v == lo) {
            scaled = 0.0;
        } else if (v == hi) {
            scaled = 100.0;
        } else {
            scaled = 100.0 * ((v - lo) / span);
        }
        out.values.push_back(scaled);
    }
    return out;
}

NormalizedSeries make_normalized(std::vector<double> values, std::string source_label) {
    if (values.empty()) {
        throw error(errc::invalid_parameter,
                    "normalized series '" + source_label + "' must hold at least one point");
    }
    for (double v : values) {
        if (!(v >= 0.0 && v <= 100.0)) {
            throw error(errc::invalid_parameter,
                        "value outside [0,100] in normalized series '" + source_label + "'");
        }
    }
    return NormalizedSeries{std::move(values), std::move(source_label)};
}

std::vector<double> ordinal_encode(std::span<const std::string> column,
                                   std::span<const std::string> ordering) {
    std::unordered_map<std::string, double> rank;
    rank.reserve(ordering.size());
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        rank.emplace(ordering[i], static_cast<double>(i));
    }
    std::vector<double> encoded;
    encoded.reserve(column.size());
    for (const auto& label : column) {
        auto it = rank.find(label);
        if (it == rank.end()) {
            throw error(errc::encoding, "label '" + label + "' not present in ordinal ordering");
        }
        encoded.push_back(it->second);
    }
    return encoded;
}

}  // namespace mdlcause
