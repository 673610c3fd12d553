#pragma once

#include <stdexcept>
#include <string>

#include "nadrc/control.hpp"
#include "nadrc/integrator.hpp"
#include "nadrc/noise.hpp"
#include "nadrc/plant.hpp"

namespace nadrc {

// Scenario parsing/validation failure; `key` names the offending entry.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string key, const std::string& what)
        : std::runtime_error(what), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

// Complete declarative description of one simulation run. Serialized as a
// flat dotted-key text document (see parse_scenario).
struct Scenario {
    std::string name = "default";
    AdrcVariant variant = AdrcVariant::Conventional;
    double horizon = 20.0;
    double output_grid_step = 1e-3;

    PlantParams plant;
    SignalSpec reference;  // cosine, amplitude 1, 0.5 rad/s
    TdConfig td;
    FeedbackConfig feedback;

    double conventional_omega0 = 50.0;
    double inner_omega0 = 10.0;
    double outer_omega0 = 20.0;

    NoiseConfig noise;
    IntegratorConfig integrator;

    void validate() const;  // throws ScenarioError naming the violated key
};

// Parse the flat dotted-key format: one `key = value` per line, `#` starts a
// comment, unknown keys and malformed or invariant-violating values raise
// ScenarioError naming the key. Omitted keys take the documented defaults.
Scenario parse_scenario(const std::string& text);

// Inverse of parse_scenario: emits every key so that
// parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

// The committed benchmark defaults (identical to scenarios/default.scn).
Scenario default_benchmark_scenario();

}  // namespace nadrc
