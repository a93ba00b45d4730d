#include "lindley/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lindley/errors.hpp"
#include "lindley/specfun.hpp"

namespace lindley {

BinnedHistogram bin_sample(std::span<const double> masses, int n_bins) {
    if (n_bins < 2) throw DataError("bin_sample: need at least two bins");
    if (masses.size() < 2) throw DataError("bin_sample: need at least two values");
    const auto [lo_it, hi_it] = std::minmax_element(masses.begin(), masses.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (!(lo < hi)) throw DataError("bin_sample: sample has no spread");

    BinnedHistogram h;
    const auto nb = static_cast<std::size_t>(n_bins);
    h.edges.resize(nb + 1);
    const double width = (hi - lo) / n_bins;
    for (std::size_t i = 0; i < nb; ++i) h.edges[i] = lo + static_cast<double>(i) * width;
    h.edges[nb] = hi;
    h.counts.assign(nb, 0);
    for (double x : masses) {
        const auto pos = std::upper_bound(h.edges.begin(), h.edges.end(), x) - h.edges.begin();
        const auto bin = std::clamp<std::ptrdiff_t>(pos - 1, 0, static_cast<std::ptrdiff_t>(nb) - 1);
        ++h.counts[static_cast<std::size_t>(bin)];
    }
    h.total = masses.size();
    return h;
}

std::vector<double> theoretical_frequencies(const DistributionSpec& spec, const BinnedHistogram& hist) {
    std::vector<double> t(hist.n_bins());
    const double n = static_cast<double>(hist.total);
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = n * hist.width(i) * pdf(spec, hist.midpoint(i));
    }
    return t;
}

double chi_square(const BinnedHistogram& observed, std::span<const double> theoretical) {
    if (theoretical.size() != observed.n_bins()) {
        throw DataError("chi_square: histogram and frequency vector differ in length");
    }
    double chi2 = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < theoretical.size(); ++i) {
        const double t = theoretical[i];
        if (!(t >= kFrequencyFloor)) continue;
        const double diff = t - static_cast<double>(observed.counts[i]);
        chi2 += diff * diff / t;
        any = true;
    }
    if (!any) throw DataError("chi_square: every theoretical frequency is below the floor");
    return chi2;
}

double q_probability(double chi2, int dof) {
    if (dof < 1) throw DomainError("q_probability: dof must be positive");
    if (!(chi2 >= 0.0)) throw DomainError("q_probability: chi2 must be nonnegative");
    return specfun::gamma_q(0.5 * dof, 0.5 * chi2);
}

double aic(double chi2, int k) { return 2.0 * k + chi2; }

double kolmogorov_q(double lambda) {
    if (!(lambda > 0.0)) return 1.0;
    if (lambda < 1.18) {
        // Complementary theta-function form; the alternating series converges
        // slowly here.
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const double scale = std::sqrt(2.0 * std::numbers::pi) / lambda;
        double p = 0.0;
        for (int j = 1; j <= 50; ++j) {
            const double odd = 2.0 * j - 1.0;
            const double term = std::exp(-odd * odd * pi2 / (8.0 * lambda * lambda));
            p += term;
            if (term <= 1e-16 * p) break;
        }
        return std::clamp(1.0 - scale * p, 0.0, 1.0);
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
        sum += term;
        if (std::abs(term) <= 1e-12 * std::abs(sum)) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> masses, const DistributionSpec& spec) {
    if (masses.empty()) throw DataError("ks_test: empty sample");
    std::vector<double> sorted(masses.begin(), masses.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(spec, sorted[i]);
        const double above = (static_cast<double>(i) + 1.0) / n;
        const double below = static_cast<double>(i) / n;
        d = std::max({d, std::abs(f - above), std::abs(f - below)});
    }
    const double root_n = std::sqrt(n);
    return {d, kolmogorov_q((root_n + 0.12 + 0.11 / root_n) * d)};
}

FitReport full_report(std::span<const double> masses, const DistributionSpec& spec, int n_bins) {
    const int k = parameter_count(spec.family());
    if (n_bins <= k) {
        throw DataError("full_report: need more bins (" + std::to_string(n_bins) +
                        ") than parameters (" + std::to_string(k) + ")");
    }
    const BinnedHistogram hist = bin_sample(masses, n_bins);
    const std::vector<double> t = theoretical_frequencies(spec, hist);
    const double chi2 = chi_square(hist, t);
    const int dof = n_bins - k;
    const KsResult ks = ks_test(masses, spec);
    return FitReport{spec,  chi2, chi2 / dof, q_probability(chi2, dof), aic(chi2, k),
                     ks.d,  ks.p_ks, n_bins, k};
}

}  // namespace lindley
