#pragma once

#include <cstdint>
#include <vector>

#include "qgrowth/estimator.hpp"
#include "qgrowth/growth.hpp"

namespace qgrowth {

struct LaserDrift {
    double amplitude = 0.01;  // relative sinusoid amplitude
    double period_hours = 1.9;
    double ramp_per_hour = 0.002;  // relative linear drift
};

struct SimConfig {
    GompertzParams growth{0.2546, 0.0835, 0.837, 0.0026};
    double run_duration_hours = 5.0;
    double cadence_minutes = 1.0;  // spacing between paired acquisitions
    double acq_duration_s = 5.0;
    std::size_t samples_per_acq = 10000;
    double eta_blank = 0.799;
    NoiseVariance v_sqz_at_blank{0.4};  // squeezed variance at the blank reference
    // Per-sample noise std over the blank mean for the coherent probe at blank
    // power. The standard error of one acquisition's transmissivity estimate
    // is noise_rel_std / sqrt(samples_per_acq).
    double noise_rel_std = 5.0;
    LaserDrift drift{};
    double lock_loss_prob = 0.01;      // per squeezed acquisition
    double lock_loss_variance = 1.0;   // noise while unlocked, shot units
    std::uint64_t seed = 1;
    bool keep_raw_samples = false;
    double monitor_power_mw = 1.7;
};

void validate_config(const SimConfig& cfg);  // throws std::invalid_argument

struct TruthPoint {
    double t_hours = 0.0;
    double eta_true = 1.0;  // relative to the blank
    double v_coherent = 1.0;
    double v_squeezed = 1.0;
    bool lock_loss = false;
};

struct SyntheticDataset {
    std::vector<Acquisition> acquisitions;  // coherent/squeezed pair per tick
    std::vector<TruthPoint> truth;
    SimConfig config;
};

struct SimulatedAcquisition {
    Acquisition acq;
    double v_true = 1.0;
    bool lock_loss = false;
};

// Transmissivity relative to the blank: 10^-(A(t) - A(0)). The Gompertz
// background is absorbed into the blank so eta_true(0) = 1 exactly.
double trajectory(const SimConfig& cfg, double t_hours);

double drift_factor(const SimConfig& cfg, double t_hours);

// Draws one acquisition from the substream (seed, acq_index); samples are
// i.i.d. Gaussian with shot-scaled variance times the probe's noise factor.
SimulatedAcquisition simulate_acquisition(const SimConfig& cfg, double t_hours, Probe probe,
                                          std::uint64_t acq_index);

// Paired coherent/squeezed acquisitions every cadence tick. Bit-identical
// for a fixed seed regardless of generation order.
SyntheticDataset simulate_run(const SimConfig& cfg);

// Calibration as an analysis would derive it from a run's opening points:
// blank statistics from the first coherent acquisitions, squeezed noise from
// the median of the first squeezed ones.
CalibrationRecord calibrate_from_run(const SyntheticDataset& ds, std::size_t blank_points = 10);

// Per-acquisition reduction of a whole dataset followed by lock-loss
// exclusion; the returned series is ordered as the acquisitions are.
std::vector<TimeSeriesPoint> reduce_run(const std::vector<Acquisition>& acquisitions,
                                        const CalibrationRecord& cal, double margin_db = 1.5);

}  // namespace qgrowth
