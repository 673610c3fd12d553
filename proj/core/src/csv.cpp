#include "nadrc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nadrc {

void export_csv(const RunResult& result, const std::string& path) {
    const SimulationTrace& tr = result.trace;
    if (tr.samples() < 2)
        throw std::runtime_error("trace has fewer than two samples; nothing to export");

    // binary mode: LF line endings on every platform
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");

    out << "t";
    for (const auto& name : tr.names) out << ',' << name;
    out << '\n';

    char buf[32];
    for (std::size_t k = 0; k < tr.samples(); ++k) {
        std::snprintf(buf, sizeof buf, "%.9g", tr.grid[k]);
        out << buf;
        for (const auto& col : tr.columns) {
            std::snprintf(buf, sizeof buf, "%.9g", col[k]);
            out << ',' << buf;
        }
        out << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace nadrc
