#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nadrc {

// Thrown when a simulation produces a non-finite value or the adaptive
// integrator's step size underflows. `t` is the last valid time, `channel`
// the offending state index (-1 when no single channel is responsible).
class IntegrationFault : public std::runtime_error {
public:
    IntegrationFault(double t, int channel, const std::string& what)
        : std::runtime_error(what), t_(t), channel_(channel) {}

    double t() const { return t_; }
    int channel() const { return channel_; }

private:
    double t_;
    int channel_;
};

struct StateVector {
    double t = 0.0;
    std::vector<double> values;
};

// Time-indexed record of one simulation: a strictly increasing grid plus
// named channels, each holding exactly one value per grid point.
struct SimulationTrace {
    std::vector<double> grid;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    std::size_t samples() const { return grid.size(); }

    bool has(const std::string& name) const {
        for (const auto& n : names)
            if (n == name) return true;
        return false;
    }

    const std::vector<double>& channel(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return columns[i];
        throw std::out_of_range("trace has no channel named '" + name + "'");
    }

    void add_channel(const std::string& name, std::vector<double> values) {
        if (values.size() != grid.size())
            throw std::invalid_argument("channel '" + name + "' length does not match grid");
        names.push_back(name);
        columns.push_back(std::move(values));
    }
};

}  // namespace nadrc
