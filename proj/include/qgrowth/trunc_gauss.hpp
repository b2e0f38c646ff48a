#pragma once

#include <cstddef>
#include <vector>

#include "qgrowth/random.hpp"

namespace qgrowth {

// Mean and width of the untruncated parent Gaussian.
struct GaussianSpec {
    double mean = 0.0;
    double sigma = 1.0;

    GaussianSpec() = default;
    GaussianSpec(double mean_value, double sigma_value);  // throws unless sigma > 0
};

struct AdjustedMoments {
    double mean = 0.0;
    double sigma = 0.0;
};

// Inverse Mills ratio g(w) = 2 phi(w) / erfc(w/sqrt(2)): the mean shift of a
// standard Gaussian conditioned on exceeding w. Evaluated through the scaled
// complementary error function for large w, where the textbook quotient
// underflows; g(w) ~ w as w -> +inf and -> 0 as w -> -inf.
double g_omega(double omega);

// First two moments of N(mean, sigma^2) restricted to [0, inf):
//   mean' = mean + g(w) sigma,   sigma' = sigma sqrt(1 + w g(w) - g(w)^2),
// with w = -mean/sigma. mean' >= max(0, mean) and 0 < sigma' <= sigma.
AdjustedMoments adjusted_moments(const GaussianSpec& spec);

// Gaussian restricted to [lower, upper] and renormalized; upper may be +inf.
class TruncatedGaussian {
public:
    TruncatedGaussian(GaussianSpec base, double lower, double upper);

    double pdf(double x) const;
    double cdf(double x) const;
    double mode() const;

    // n i.i.d. draws. Rejection sampling against the parent Gaussian, with an
    // inverse-CDF fallback when the acceptance rate drops below 1%.
    std::vector<double> sample(RandomState& rng, std::size_t n) const;

    const GaussianSpec& base() const { return base_; }
    double lower() const { return lower_; }
    double upper() const { return upper_; }
    double mass() const { return mass_; }  // parent probability inside [lower, upper]

private:
    GaussianSpec base_;
    double lower_;
    double upper_;
    double mass_;
    double cdf_lower_;  // parent CDF at the bounds, for inverse-CDF sampling
    double cdf_upper_;
};

// Standard normal density, CDF and quantile shared across the statistics code.
double normal_pdf(double z);
double normal_cdf(double z);
double normal_quantile(double p);

// exp(x^2) * erfc(x), stable for large positive x.
double erfcx(double x);

}  // namespace qgrowth
