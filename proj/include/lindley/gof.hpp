#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lindley/distribution.hpp"

namespace lindley {

/// Equal-width histogram over [min, max] of a sample.
struct BinnedHistogram {
    std::vector<double> edges;        // n_bins + 1, strictly increasing
    std::vector<std::size_t> counts;  // n_bins
    std::size_t total = 0;

    std::size_t n_bins() const noexcept { return counts.size(); }
    double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
    double midpoint(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

inline constexpr int kDefaultBins = 20;

/// Theoretical frequencies below this are left out of the chi-square sum.
inline constexpr double kFrequencyFloor = 1e-12;

struct KsResult {
    double d = 0.0;
    double p_ks = 0.0;
};

struct FitReport {
    DistributionSpec spec;
    double chi2 = 0.0;
    double chi2_red = 0.0;
    double q = 0.0;
    double aic = 0.0;
    double d = 0.0;
    double p_ks = 0.0;
    int n_bins = 0;
    int k_params = 0;
};

/// The last bin is closed on the right so the maximum is counted.
/// Throws DataError unless the sample has at least two distinct values and
/// n_bins >= 2.
BinnedHistogram bin_sample(std::span<const double> masses, int n_bins = kDefaultBins);

/// T_i = N * width_i * pdf(midpoint_i).
std::vector<double> theoretical_frequencies(const DistributionSpec& spec, const BinnedHistogram& hist);

/// Sum of (T_i - O_i)^2 / T_i over bins with T_i >= kFrequencyFloor.
double chi_square(const BinnedHistogram& observed, std::span<const double> theoretical);

/// Upper-tail chi-square probability Q(dof/2, chi2/2).
double q_probability(double chi2, int dof);

/// Akaike information criterion with the Gaussian-error likelihood: 2k + chi2.
double aic(double chi2, int k);

/// Kolmogorov distribution tail Q_KS(lambda) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 lambda^2}.
double kolmogorov_q(double lambda);

/// One-sample Kolmogorov-Smirnov distance and its asymptotic significance,
/// with lambda = (sqrt(n) + 0.12 + 0.11 / sqrt(n)) D.
KsResult ks_test(std::span<const double> masses, const DistributionSpec& spec);

/// All statistics above for one (sample, distribution) pair, dof = n_bins - k.
FitReport full_report(std::span<const double> masses, const DistributionSpec& spec,
                      int n_bins = kDefaultBins);

}  // namespace lindley
