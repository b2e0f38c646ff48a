#include "qgrowth/trunc_gauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qgrowth/errors.hpp"

namespace qgrowth {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;  // 1/sqrt(2 pi)

// Parent-Gaussian probability of [lo, hi] for N(mean, sigma^2), written in
// erfc form on whichever side is away from the mean so tail masses keep
// their relative accuracy.
double interval_mass(double mean, double sigma, double lo, double hi) {
    const double alpha = (lo - mean) / sigma;
    const double beta = (hi - mean) / sigma;
    if (alpha >= 0.0)
        return 0.5 * (std::erfc(alpha / kSqrt2) - std::erfc(beta / kSqrt2));
    if (beta <= 0.0)
        return 0.5 * (std::erfc(-beta / kSqrt2) - std::erfc(-alpha / kSqrt2));
    return normal_cdf(beta) - normal_cdf(alpha);
}

}  // namespace

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    const bool upper = p > 0.5;
    const double pt = upper ? 1.0 - p : p;
    // Hastings rational seed (|err| < 4.5e-4), then Halley steps against the
    // erfc-based CDF push it to machine precision.
    const double t = std::sqrt(-2.0 * std::log(pt));
    double x = -(t - (2.515517 + t * (0.802853 + t * 0.010328)) /
                         (1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308))));
    for (int i = 0; i < 3; ++i) {
        const double err = normal_cdf(x) - pt;
        const double d = normal_pdf(x);
        if (d <= 0.0) break;
        const double u = err / d;
        x -= u / (1.0 + 0.5 * u * x);
    }
    return upper ? -x : x;
}

double erfcx(double x) {
    if (x < 0.0) {
        // Reflection; overflows to +inf for x << -26, as the true value does.
        const double e = std::exp(x * x);
        return 2.0 * e - erfcx(-x);
    }
    if (x < 15.0) return std::exp(x * x) * std::erfc(x);
    // Asymptotic series erfcx(x) = 1/(x sqrt(pi)) * sum (-1)^n (2n-1)!!/(2x^2)^n.
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 30; ++n) {
        term *= -(2.0 * n - 1.0) * inv2x2;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum / (x * 1.7724538509055160273);  // sqrt(pi)
}

double g_omega(double omega) {
    if (!std::isfinite(omega)) {
        if (std::isnan(omega)) throw std::domain_error("g_omega: omega must be finite");
        return omega > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    if (omega <= 30.0) {
        // Both numerator and denominator stay normal down to ~1e-200 here.
        return 2.0 * normal_pdf(omega) / std::erfc(omega / kSqrt2);
    }
    // g(w) = w / S with S the asymptotic erfcx series; avoids the underflow
    // of the naive quotient.
    const double inv_w2 = 1.0 / (omega * omega);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 30; ++n) {
        term *= -(2.0 * n - 1.0) * inv_w2;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return omega / sum;
}

GaussianSpec::GaussianSpec(double mean_value, double sigma_value)
    : mean(mean_value), sigma(sigma_value) {
    if (!std::isfinite(mean) || !std::isfinite(sigma) || !(sigma > 0.0))
        throw std::domain_error("GaussianSpec requires finite mean and sigma > 0");
}

AdjustedMoments adjusted_moments(const GaussianSpec& spec) {
    const double omega = -spec.mean / spec.sigma;
    const double g = g_omega(omega);
    const double radicand = 1.0 + omega * g - g * g;
    if (!(radicand > 0.0))
        throw NumericalError("adjusted_moments: non-positive variance radicand (precision loss)");
    return AdjustedMoments{spec.mean + g * spec.sigma, spec.sigma * std::sqrt(radicand)};
}

TruncatedGaussian::TruncatedGaussian(GaussianSpec base, double lower, double upper)
    : base_(base), lower_(lower), upper_(upper) {
    if (std::isnan(lower_) || std::isnan(upper_) || !(lower_ < upper_))
        throw std::domain_error("TruncatedGaussian requires lower < upper");
    if (!(base_.sigma > 0.0)) throw std::domain_error("TruncatedGaussian requires sigma > 0");
    mass_ = interval_mass(base_.mean, base_.sigma, lower_, upper_);
    if (!(mass_ > 1e-300))
        throw NumericalError("TruncatedGaussian: numerically empty truncation interval");
    cdf_lower_ = normal_cdf((lower_ - base_.mean) / base_.sigma);
    cdf_upper_ = normal_cdf((upper_ - base_.mean) / base_.sigma);
}

double TruncatedGaussian::pdf(double x) const {
    if (x < lower_ || x > upper_) return 0.0;
    return normal_pdf((x - base_.mean) / base_.sigma) / (base_.sigma * mass_);
}

double TruncatedGaussian::cdf(double x) const {
    if (x <= lower_) return 0.0;
    if (x >= upper_) return 1.0;
    const double c = interval_mass(base_.mean, base_.sigma, lower_, x) / mass_;
    return std::clamp(c, 0.0, 1.0);
}

double TruncatedGaussian::mode() const { return std::clamp(base_.mean, lower_, upper_); }

std::vector<double> TruncatedGaussian::sample(RandomState& rng, std::size_t n) const {
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    std::vector<double> out;
    out.reserve(n);
    if (mass_ >= 0.01) {
        while (out.size() < n) {
            const double x = base_.mean + base_.sigma * rng.normal();
            if (x >= lower_ && x <= upper_) out.push_back(x);
        }
        return out;
    }
    // Deep-tail truncation: rejection would stall, invert the parent CDF on
    // the retained probability band instead.
    for (std::size_t i = 0; i < n; ++i) {
        double p = cdf_lower_ + rng.uniform() * (cdf_upper_ - cdf_lower_);
        p = std::clamp(p, 1e-300, 1.0 - 1e-16);
        const double x = base_.mean + base_.sigma * normal_quantile(p);
        out.push_back(std::clamp(x, lower_, upper_));
    }
    return out;
}

}  // namespace qgrowth
