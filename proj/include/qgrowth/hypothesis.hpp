#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgrowth/estimator.hpp"

namespace qgrowth {

// Blank (H0) vs growth-at-time-t (H1) transmissivity estimator distributions,
// both Gaussian restricted to [0, 1].
struct HypothesisPair {
    double eta_bk = 1.0;
    double sigma_bk = 1.0;
    double eta_t = 1.0;
    double sigma_t = 1.0;
};

struct ErrorProbabilities {
    double p_fp = 0.0;
    double p_fn = 0.0;
    double tau = 0.0;
    double p_mean = 0.0;  // (p_fp + p_fn) / 2
};

enum class Criterion { symmetric, asymmetric };

const char* criterion_name(Criterion c);
Criterion criterion_from_name(const std::string& name);

struct DetectionReport {
    Probe probe = Probe::coherent;
    Criterion criterion = Criterion::symmetric;
    double target = 0.0;                  // symmetric: mean error; asymmetric: p_fn level
    std::optional<double> fp_target;      // asymmetric only
    double t_detect_hours = 0.0;
    bool reached = false;
};

// Parent-Gaussian probability inside [0, 1] for a distribution centered at
// `center`: the normalization N of the bounded-transmissivity densities.
double truncated_mass(double center, double sigma);

// H0 mass below tau / H0 mass in [0, 1]; nondecreasing in tau, 0 at tau = 0.
double p_false_positive(const HypothesisPair& pair, double tau);

// H1 mass above tau / H1 mass in [0, 1]; nonincreasing in tau, 0 at tau = 1.
double p_false_negative(const HypothesisPair& pair, double tau);

// Threshold minimizing (p_fp + p_fn)/2: coarse 256-point grid over
// [eta_t, eta_bk] followed by golden-section refinement.
ErrorProbabilities min_mean_error(const HypothesisPair& pair);

// Asymmetric test: solves p_false_positive(tau) = fp_target by bisection
// (tau tolerance 1e-10) and reports the resulting p_fn.
ErrorProbabilities fn_at_fixed_fp(const HypothesisPair& pair, double fp_target);

struct HypothesisPoint {
    double t_hours = 0.0;
    HypothesisPair pair;
};

// First time the criterion's error metric falls to `target`, linearly
// interpolated between bracketing samples. For the asymmetric criterion,
// fp_target fixes the threshold and `target` is the p_fn level.
DetectionReport detection_time(const std::vector<HypothesisPoint>& series, Probe probe,
                               Criterion criterion, double target,
                               std::optional<double> fp_target = std::nullopt);

// t_detect(coherent) - t_detect(squeezed); empty when either never reached
// its criterion. Positive means the squeezed probe detected earlier.
std::optional<double> compare_probes(const DetectionReport& coherent,
                                     const DetectionReport& squeezed);

}  // namespace qgrowth
