#pragma once

#include <vector>

namespace qgrowth {

// Quadrature-noise level in dB relative to shot noise; negative = squeezed.
struct SqueezingLevel {
    double db = 0.0;
};

// Noise variance in shot-noise units (shot noise == 1). Values above 1
// represent excess technical noise.
struct NoiseVariance {
    double v = 1.0;

    NoiseVariance() = default;
    explicit NoiseVariance(double variance);
};

// Dimensionless power transmissivity, 0 <= eta <= 1.
struct ChannelTransmissivity {
    double eta = 1.0;

    ChannelTransmissivity() = default;
    explicit ChannelTransmissivity(double value);
};

// v = 10^(db/10); 0 dB is exactly shot noise.
NoiseVariance db_to_variance(SqueezingLevel level);
SqueezingLevel variance_to_db(NoiseVariance variance);

// Beam-splitter loss model v' = eta*v + (1 - eta). Shot noise is a fixed
// point; squeezing decays toward it as eta drops.
NoiseVariance propagate_through_loss(NoiseVariance v_in, ChannelTransmissivity eta);

// Inverts the loss model: the channel efficiency that degrades v_source into
// v_detected. Requires v_source < v_detected <= 1 (loss cannot improve noise).
ChannelTransmissivity infer_path_efficiency(NoiseVariance v_source, NoiseVariance v_detected);

// Per-element variance_to_db(propagate_through_loss(v0, eta_i)): the expected
// squeezing trace along a transmissivity series normalized to the blank.
std::vector<SqueezingLevel> expected_squeezing_curve(
    NoiseVariance v_detected_initial,
    const std::vector<ChannelTransmissivity>& eta_series);

}  // namespace qgrowth
