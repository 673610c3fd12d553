#pragma once

namespace nadrc {

// Benchmark plant  x1' = x2,  x2' = a1*x1 + a2*sin(x2) + w(t) + (1 + a3*sin(t))*u.
// |a3| < 1 keeps the effective input gain strictly positive.
struct PlantParams {
    double a1 = 0.2;
    double a2 = 0.1;
    double a3 = 0.2;
    bool disturbance_on = true;

    void validate() const;
};

struct SignalSpec {
    enum class Kind { Cosine, ExpCosine, Constant, Zero };

    Kind kind = Kind::Cosine;
    double amplitude = 1.0;
    double frequency = 0.5;  // rad/s
    double offset = 0.0;

    double eval(double t) const;

    void validate() const;  // frequency >= 0
};

// w(t) = exp(-t) * cos(t)
double exogenous_disturbance(double t);

// r(t) = cos(0.5 t), the benchmark reference profile.
double reference(double t);

// dx[0] = x[1]; dx[1] = a1*x1 + a2*sin(x2) + w(t)*[disturbance_on] + (1 + a3*sin(t))*u
void benchmark_plant_deriv(double t, const double x[2], double u,
                           const PlantParams& p, double dx[2]);

// Ground-truth extended state: everything the unit-gain observer model lumps
// into x3, including the input-gain mismatch a3*sin(t)*u. Satisfies
// total_disturbance == benchmark_plant_deriv()[1] - u identically.
double total_disturbance(double t, const double x[2], double u, const PlantParams& p);

}  // namespace nadrc
