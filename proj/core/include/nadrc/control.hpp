#pragma once

#include "nadrc/observer.hpp"

namespace nadrc {

struct TdConfig {
    double R = 10.0;  // acceleration limit

    void validate() const;
};

struct TdState {
    double r1 = 0.0;  // tracked signal
    double r2 = 0.0;  // tracked derivative
};

// Tracking differentiator:
//   dr1 = r2
//   dr2 = -R * sign(r1 - r + r2*|r2|/(2R)),  sign(0) = 0
void td_deriv(const TdState& s, double r, double R, double d[2]);

// Piecewise feedback nonlinearity: |e| <= delta -> e/delta^{1-alpha},
// otherwise |e|^alpha * sign(e). Continuous at |e| = delta; identity at alpha = 1.
// Requires 0 < alpha <= 1 and delta > 0.
double fal(double e, double alpha, double delta);

enum class FeedbackLaw { LinearPd, NonlinearFal };

struct FeedbackConfig {
    FeedbackLaw law = FeedbackLaw::LinearPd;
    double k1 = 25.0;
    double k2 = 10.0;
    double alpha1 = 0.75;  // fal exponents, used by NonlinearFal only
    double alpha2 = 1.0;
    double delta = 0.01;

    void validate() const;
};

// u0 = k1*e1 + k2*e2 (linear-pd) or k1*fal(e1,a1,d) + k2*fal(e2,a2,d).
double state_error_feedback(double e1, double e2, const FeedbackConfig& cfg);

// u = u0 - xhat_{n+1}: cancel the estimated total disturbance.
double cadrc_control(double u0, double xhat_np1);

struct NadrcControl {
    double v;  // intermediate control seen by the outer observer
    double u;  // plant input
};

// v = u0 - zhat_{n+1} (outer loop cancels the inner residual estimate),
// u = v - xhat_{n+1} (inner loop cancels the total disturbance estimate).
// Degenerates to cadrc_control when zhat_{n+1} = 0.
NadrcControl nadrc_control(double u0, double zhat_np1, double xhat_np1);

enum class AdrcVariant { Conventional, Nested };

// Full controller description for one run. Conventional uses `inner` only.
struct AdrcVariantConfig {
    AdrcVariant kind = AdrcVariant::Conventional;
    LesoConfig inner;
    LesoConfig outer;
    FeedbackConfig feedback;
    TdConfig td;

    void validate() const;
};

}  // namespace nadrc
