#pragma once

#include <array>
#include <vector>

namespace qgrowth {

// Four-parameter Gompertz growth model,
//   A(t) = a exp(-exp(mu e / a (theta - t) + 1)) + a_bk.
struct GompertzParams {
    double a = 0.0;      // asymptotic absorbance
    double mu = 0.0;     // max growth rate, 1/h
    double theta = 0.0;  // lag time, h
    double a_bk = 0.0;   // background absorbance offset
};

struct FitResult {
    GompertzParams params;
    std::array<double, 4> std_errors{};  // order: a, mu, theta, a_bk
    double residual_norm = 0.0;
    bool converged = false;
    int iterations = 0;
};

// eta(t) = eta_bk - c t^2 + d t^3; only meaningful on the fitted window.
struct EarlyPolyParams {
    double eta_bk = 1.0;
    double c = 0.0;
    double d = 0.0;
    double residual_norm = 0.0;
};

struct InflectionPoint {
    double t_hours = 0.0;  // theta + a / (mu e)
    double slope = 0.0;    // equals mu, the max growth rate
};

double gompertz_eval(const GompertzParams& p, double t_hours);

// d(A)/d(a, mu, theta, a_bk) at one time point; written in exp(u - exp(u))
// form so the log-phase terms stay finite deep in the lag phase.
std::array<double, 4> gompertz_jacobian_row(const GompertzParams& p, double t_hours);

// Damped Gauss-Newton (Levenberg) least squares with the analytic Jacobian.
// weights, when given, multiply the squared residuals. Non-convergence is
// reported through FitResult::converged, not thrown.
FitResult gompertz_fit(const std::vector<double>& t_hours,
                       const std::vector<double>& absorbance,
                       const std::vector<double>* weights = nullptr,
                       const GompertzParams* init = nullptr);

// Doubling time Delta = ln(2) log10(e) / mu for log10-absorbance growth.
double doubling_time_hours(double mu_per_hour);

InflectionPoint inflection_point(const GompertzParams& p);

// A = -log10(eta_sample / eta_blank); may be negative when noise pushes the
// sample reading above the blank.
double absorbance_from_transmissivity(double eta_sample, double eta_blank);
double transmissivity_from_absorbance(double absorbance);

// Linear least squares for (c, d) with eta_bk held fixed, over points with
// t <= window_end_hours.
EarlyPolyParams early_poly_fit(const std::vector<double>& t_hours,
                               const std::vector<double>& eta,
                               double window_end_hours,
                               double eta_bk = 1.0);
double early_poly_eval(const EarlyPolyParams& p, double t_hours);

}  // namespace qgrowth
