#include "nadrc/plant.hpp"

#include <cmath>
#include <stdexcept>

namespace nadrc {

void PlantParams::validate() const {
    if (!(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(a3)))
        throw std::invalid_argument("plant parameters must be finite");
    if (!(std::abs(a3) < 1.0))
        throw std::invalid_argument("plant a3 must satisfy |a3| < 1 so the input gain cannot vanish");
}

void SignalSpec::validate() const {
    if (!(frequency >= 0.0))
        throw std::invalid_argument("signal frequency must be >= 0");
}

double SignalSpec::eval(double t) const {
    switch (kind) {
        case Kind::Zero:
            return 0.0;
        case Kind::Constant:
            return offset + amplitude;
        case Kind::Cosine:
            return offset + amplitude * std::cos(frequency * t);
        case Kind::ExpCosine:
            return offset + amplitude * std::exp(-t) * std::cos(frequency * t);
    }
    return 0.0;
}

double exogenous_disturbance(double t) {
    return std::exp(-t) * std::cos(t);
}

double reference(double t) {
    return std::cos(0.5 * t);
}

void benchmark_plant_deriv(double t, const double x[2], double u,
                           const PlantParams& p, double dx[2]) {
    const double w = p.disturbance_on ? exogenous_disturbance(t) : 0.0;
    dx[0] = x[1];
    dx[1] = p.a1 * x[0] + p.a2 * std::sin(x[1]) + w + (1.0 + p.a3 * std::sin(t)) * u;
}

double total_disturbance(double t, const double x[2], double u, const PlantParams& p) {
    const double w = p.disturbance_on ? exogenous_disturbance(t) : 0.0;
    return p.a1 * x[0] + p.a2 * std::sin(x[1]) + w + p.a3 * std::sin(t) * u;
}

}  // namespace nadrc
