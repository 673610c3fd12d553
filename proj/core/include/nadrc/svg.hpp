#pragma once

#include <string>

#include "nadrc/runner.hpp"

namespace nadrc {

// Static SVG (no scripts) of one run: stacked panels for output vs TD profile,
// plant input, and disturbance-estimation error (inner vs nested residual
// when present), with axes, ticks, and legends.
void export_svg(const RunResult& result, const std::string& path);

// 2x2 panel grid of a comparison: variant a/b columns, clean/noisy rows,
// each panel showing output vs TD profile.
void export_svg(const CompareResult& result, const std::string& path);

}  // namespace nadrc
