#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgrowth/noise.hpp"

namespace qgrowth {

enum class Probe { coherent, squeezed };

const char* probe_name(Probe p);
Probe probe_from_name(const std::string& name);  // throws SchemaError on unknown names

// One timed photometer acquisition. mean/variance/count summaries are always
// populated; raw demodulated samples are kept only when requested.
struct Acquisition {
    double t_hours = 0.0;
    Probe probe = Probe::coherent;
    double mean = 0.0;
    double variance = 0.0;  // sample variance, n-1 denominator
    std::size_t count = 0;
    double monitor_power = 1.0;  // DC carrier power, arbitrary units
    double duration_s = 5.0;
    double sample_rate_hz = 0.0;
    std::vector<double> samples;  // empty when only summaries are kept

    static Acquisition from_samples(double t_hours, Probe probe, std::vector<double> samples,
                                    double monitor_power, double duration_s);
};

struct CalibrationRecord {
    double blank_mean = 1.0;     // mean signal through the medium-only cuvette
    double blank_monitor = 1.0;  // monitor power during the blank
    double eta_blank = 0.799;    // absolute blank transmissivity
    // Coherent blank variance (dark included); with dark subtracted it defines
    // the shot-noise unit at blank power.
    double shot_ref_variance = 1.0;
    double dark_variance = 0.0;
    NoiseVariance v_detected_sqz{};  // squeezed-probe variance with no cuvette in the path
    double lpf_bandwidth_hz = 25e3;  // detection-chain low-pass; caps the effective sample count
};

struct TimeSeriesPoint {
    double t_hours = 0.0;
    Probe probe = Probe::coherent;
    double eta_hat = 0.0;    // transmissivity normalized so the blank reads 1
    double sigma_eta = 0.0;  // standard error of eta_hat
    double a_raw_mean = 0.0;
    double a_mode = 0.0;       // max(0, a_raw_mean), the truncated-distribution mode
    double a_mean_corr = 0.0;  // truncation-corrected absorbance moments
    double a_sigma_corr = 0.0;
    std::optional<double> var_db;  // measured noise relative to shot, dB; empty when unusable
    bool variance_clamped = false;
    bool excluded = false;
};

// Rescales an acquisition to the blank monitor power (mean by the power
// ratio, variance by its square). Idempotent.
Acquisition normalize_power_drift(const Acquisition& acq, const CalibrationRecord& cal);

struct TransmissivityEstimate {
    double eta_hat = 0.0;
    double sigma_eta = 0.0;
    bool variance_clamped = false;
};

// eta_hat = mean / blank_mean; sigma_eta is the standard error of the
// acquisition mean after dark subtraction. The effective sample count is
// capped at 2x the low-pass bandwidth times the duration, since faster
// sampling only adds correlated points.
TransmissivityEstimate estimate_transmissivity(const Acquisition& acq,
                                               const CalibrationRecord& cal);

// Fills the absorbance fields from eta_hat/sigma_eta: raw -log10 value,
// first-order sigma propagation, truncation-corrected moments on [0, inf),
// and the clamped mode.
TimeSeriesPoint estimate_absorbance(TimeSeriesPoint point);

// Measured variance in dB relative to the shot-noise unit rescaled to the
// acquisition's mean power. Empty when the dark-subtracted variance is
// non-positive (the point is then unusable for noise analysis).
std::optional<SqueezingLevel> variance_rel_shot_db(const Acquisition& acq,
                                                   const CalibrationRecord& cal);

// Full per-acquisition reduction: power normalization, transmissivity and
// absorbance estimation, noise level.
TimeSeriesPoint reduce_acquisition(const Acquisition& acq, const CalibrationRecord& cal);

// Flags squeezed points whose measured noise sits more than margin_db above
// the loss-model expectation (phase-lock loss). Coherent points are never
// excluded. Pointwise and idempotent.
std::vector<TimeSeriesPoint> exclude_lock_loss(std::vector<TimeSeriesPoint> series,
                                               const CalibrationRecord& cal,
                                               double margin_db = 1.5);

}  // namespace qgrowth
