#include "qgrowth/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qgrowth {

NoiseVariance::NoiseVariance(double variance) : v(variance) {
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw std::domain_error("noise variance must be positive and finite");
}

ChannelTransmissivity::ChannelTransmissivity(double value) : eta(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::domain_error("transmissivity must lie in [0, 1]");
}

NoiseVariance db_to_variance(SqueezingLevel level) {
    if (!std::isfinite(level.db))
        throw std::domain_error("squeezing level must be finite");
    return NoiseVariance(std::pow(10.0, level.db / 10.0));
}

SqueezingLevel variance_to_db(NoiseVariance variance) {
    return SqueezingLevel{10.0 * std::log10(variance.v)};
}

NoiseVariance propagate_through_loss(NoiseVariance v_in, ChannelTransmissivity eta) {
    return NoiseVariance(eta.eta * v_in.v + (1.0 - eta.eta));
}

ChannelTransmissivity infer_path_efficiency(NoiseVariance v_source, NoiseVariance v_detected) {
    if (!(v_source.v < 1.0))
        throw std::domain_error("source must be squeezed (variance < 1)");
    if (!(v_detected.v > v_source.v))
        throw std::domain_error("detected noise cannot lie below the source level under loss");
    if (!(v_detected.v <= 1.0))
        throw std::domain_error("detected variance above shot noise is not a pure-loss channel");
    return ChannelTransmissivity((1.0 - v_detected.v) / (1.0 - v_source.v));
}

std::vector<SqueezingLevel> expected_squeezing_curve(
    NoiseVariance v_detected_initial,
    const std::vector<ChannelTransmissivity>& eta_series) {
    std::vector<SqueezingLevel> out;
    out.reserve(eta_series.size());
    for (const auto& eta : eta_series)
        out.push_back(variance_to_db(propagate_through_loss(v_detected_initial, eta)));
    return out;
}

}  // namespace qgrowth
