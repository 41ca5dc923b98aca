#pragma once

#include "thetapairs/pair_catalog.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace thetapairs {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
    std::uint64_t seed = 1;
    std::size_t slice_samples = 50;
    std::size_t slice_targets = 20;
    std::size_t tangent_planes = 10;
    std::size_t diagonal_samples = 20;
};

// Every applicable computation for one pair. Sections that do not apply are null.
// Field order is fixed; only "timing_ms" varies between identical runs.
Json build_report(const PairSpec& spec, const ReportOptions& options);

// Aligned text tables for the same document.
std::string render_text(const Json& report);

Json to_json(const Vec& v);
Json to_json(const Matrix& m);

} // namespace thetapairs
