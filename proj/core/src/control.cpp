#include "nadrc/control.hpp"

#include <cmath>
#include <stdexcept>

namespace nadrc {

void TdConfig::validate() const {
    if (!(R > 0.0))
        throw std::invalid_argument("TD acceleration limit R must be > 0");
}

void td_deriv(const TdState& s, double r, double R, double d[2]) {
    const double g = s.r1 - r + s.r2 * std::abs(s.r2) / (2.0 * R);
    const double sgn = (g > 0.0) - (g < 0.0);  // sign(0) = 0
    d[0] = s.r2;
    d[1] = -R * sgn;
}

double fal(double e, double alpha, double delta) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("fal exponent must satisfy 0 < alpha <= 1");
    if (!(delta > 0.0))
        throw std::invalid_argument("fal threshold delta must be > 0");
    const double mag = std::abs(e);
    if (mag <= delta)
        return e / std::pow(delta, 1.0 - alpha);
    const double sgn = (e > 0.0) - (e < 0.0);
    return std::pow(mag, alpha) * sgn;
}

void FeedbackConfig::validate() const {
    if (!(k1 > 0.0 && k2 > 0.0))
        throw std::invalid_argument("feedback gains k1, k2 must be > 0");
    if (!(alpha1 > 0.0 && alpha1 <= 1.0) || !(alpha2 > 0.0 && alpha2 <= 1.0))
        throw std::invalid_argument("feedback fal exponents must satisfy 0 < alpha <= 1");
    if (!(delta > 0.0))
        throw std::invalid_argument("feedback fal delta must be > 0");
}

double state_error_feedback(double e1, double e2, const FeedbackConfig& cfg) {
    if (cfg.law == FeedbackLaw::LinearPd)
        return cfg.k1 * e1 + cfg.k2 * e2;
    return cfg.k1 * fal(e1, cfg.alpha1, cfg.delta) + cfg.k2 * fal(e2, cfg.alpha2, cfg.delta);
}

double cadrc_control(double u0, double xhat_np1) {
    return u0 - xhat_np1;
}

NadrcControl nadrc_control(double u0, double zhat_np1, double xhat_np1) {
    const double v = u0 - zhat_np1;
    return {v, v - xhat_np1};
}

void AdrcVariantConfig::validate() const {
    td.validate();
    feedback.validate();
    inner.validate();
    if (kind == AdrcVariant::Nested) {
        outer.validate();
        if (outer.n != inner.n)
            throw std::invalid_argument("nested observers must share the plant order");
    }
}

}  // namespace nadrc
