#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qgrowth/estimator.hpp"
#include "qgrowth/hypothesis.hpp"
#include "qgrowth/simulator.hpp"

namespace qgrowth {

// Locale-independent float formatting at 9 significant digits; the common
// currency of every CSV writer here, so repeated writes are byte-identical.
std::string format_double(double x);

// Acquisition summaries, one row per acquisition:
//   t_hours,probe,mean,variance,count,monitor_power,duration_s,sample_rate_hz
void write_acquisitions(const std::vector<Acquisition>& acqs, const std::filesystem::path& path);
std::vector<Acquisition> read_acquisitions(const std::filesystem::path& path);

// Raw-trace sidecar: a single `sample` column.
void write_raw_samples(const std::vector<double>& samples, const std::filesystem::path& path);
std::vector<double> read_raw_samples(const std::filesystem::path& path);

void write_truth(const std::vector<TruthPoint>& truth, const std::filesystem::path& path);
std::vector<TruthPoint> read_truth(const std::filesystem::path& path);

// Flat JSON run configuration; unknown keys are rejected, missing keys take
// defaults. Physical quantities carry unit suffixes in their key names.
SimConfig read_run_config(const std::filesystem::path& path);
void write_run_config(const SimConfig& cfg, const std::filesystem::path& path);
void apply_config_override(SimConfig& cfg, const std::string& key, const std::string& value);

CalibrationRecord read_calibration(const std::filesystem::path& path);
void write_calibration(const CalibrationRecord& cal, const std::filesystem::path& path);

// One row per (time, probe) for figure-style exports; missing analysis
// columns are written empty.
struct PlotRow {
    double t_hours = 0.0;
    Probe probe = Probe::coherent;
    std::optional<double> eta_hat, sigma_eta, a_mode, a_mean_corr, a_sigma_corr;
    std::optional<double> var_db, expected_var_db, p_mean, p_fn_at_fp;
    bool excluded = false;
};

void write_plot_table(std::vector<PlotRow> rows, const std::filesystem::path& path);

void write_detection_reports(const std::vector<DetectionReport>& reports,
                             const std::filesystem::path& path);
std::vector<DetectionReport> read_detection_reports(const std::filesystem::path& path);

}  // namespace qgrowth
