#pragma once

#include <string>

#include "nadrc/runner.hpp"

namespace nadrc {

// Write the trace as CSV: header of channel names, one row per grid sample,
// 9-significant-digit decimal text, LF line endings. Throws std::runtime_error
// (before creating any file) if the trace has fewer than two samples.
void export_csv(const RunResult& result, const std::string& path);

}  // namespace nadrc
