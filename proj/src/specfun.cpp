#include "lindley/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lindley/errors.hpp"

namespace lindley::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series A_g(z) for the shifted argument z - 1.
double lanczos_sum(double zm1) {
    double x = kLanczosCoef[0];
    for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
        x += kLanczosCoef[i] / (zm1 + static_cast<double>(i));
    }
    return x;
}

void require_positive(double z, const char* fn) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                          std::to_string(z));
    }
}

// exp(-z + a ln z - ln Gamma(a)), the common prefactor of P and Q.
double incgamma_prefactor(double a, double z) {
    return std::exp(-z + a * std::log(z) - log_gamma(a));
}

SpecialValue lower_series(double a, double z, const SeriesOptions& opts) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 1; n <= opts.max_terms; ++n) {
        ap += 1.0;
        del *= z / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * opts.rel_tol) {
            return {sum * incgamma_prefactor(a, z), true, n};
        }
    }
    return {0.0, false, opts.max_terms};
}

// Modified Lentz evaluation of the continued fraction for Q(a, z).
SpecialValue upper_fraction(double a, double z, const SeriesOptions& opts) {
    constexpr double tiny = 1e-300;
    double b = z + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= opts.max_terms; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < opts.rel_tol) {
            return {h * incgamma_prefactor(a, z), true, i};
        }
    }
    return {0.0, false, opts.max_terms};
}

void check_incgamma_args(double a, double z, const char* fn) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError(std::string(fn) + ": a must be positive, got " + std::to_string(a));
    }
    if (!(z >= 0.0) || std::isnan(z)) {
        throw DomainError(std::string(fn) + ": z must be nonnegative, got " + std::to_string(z));
    }
}

struct ScaledSum {
    double sum = 0.0;
    double log_scale = 0.0;
    bool converged = false;
    int terms = 0;
};

// Sum of the Kummer series, kept as sum * exp(log_scale) so that large
// positive arguments do not overflow before the Whittaker prefactor is applied.
ScaledSum kummer_series(double a, double b, double z, const SeriesOptions& opts) {
    constexpr double rescale_at = 1e280;
    const double log_rescale = std::log(rescale_at);
    ScaledSum out;
    double term = 1.0;
    out.sum = 1.0;
    for (int k = 0; k < opts.max_terms; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1.0);
        out.sum += term;
        out.terms = k + 1;
        if (term == 0.0) {
            out.converged = true;
            return out;
        }
        const double next_ratio = std::abs((a + k + 1.0) / (b + k + 1.0) * z / (k + 2.0));
        if (next_ratio < 1.0) {
            const double tail = std::abs(term) * next_ratio / (1.0 - next_ratio);
            if (tail <= opts.rel_tol * std::abs(out.sum)) {
                out.converged = true;
                return out;
            }
        }
        if (std::abs(out.sum) > rescale_at) {
            out.sum /= rescale_at;
            term /= rescale_at;
            out.log_scale += log_rescale;
        }
    }
    return out;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::floor(x) == x;
}

}  // namespace

double gamma(double z) {
    require_positive(z, "gamma");
    if (z < 0.5) {
        // Reflection keeps the Lanczos sum in its accurate range.
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma(1.0 - z));
    }
    const double zm1 = z - 1.0;
    const double t = zm1 + kLanczosG + 0.5;
    const double x = lanczos_sum(zm1);
    constexpr double sqrt_two_pi = 2.5066282746310005024;
    if (z < 140.0) {
        return sqrt_two_pi * std::pow(t, zm1 + 0.5) * std::exp(-t) * x;
    }
    return sqrt_two_pi * x * std::exp((zm1 + 0.5) * std::log(t) - t);
}

double log_gamma(double z) {
    require_positive(z, "log_gamma");
    if (z < 0.5) {
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * z)) - log_gamma(1.0 - z);
    }
    const double zm1 = z - 1.0;
    const double t = zm1 + kLanczosG + 0.5;
    constexpr double log_sqrt_two_pi = 0.91893853320467274178;
    return log_sqrt_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

double gamma_p(double a, double z, const SeriesOptions& opts) {
    check_incgamma_args(a, z, "gamma_p");
    if (z == 0.0) return 0.0;
    if (std::isinf(z)) return 1.0;
    if (z < a + 1.0) {
        return checked(lower_series(a, z, opts), "gamma_p series");
    }
    return 1.0 - checked(upper_fraction(a, z, opts), "gamma_p continued fraction");
}

double gamma_q(double a, double z, const SeriesOptions& opts) {
    check_incgamma_args(a, z, "gamma_q");
    if (z == 0.0) return 1.0;
    if (std::isinf(z)) return 0.0;
    if (z < a + 1.0) {
        return 1.0 - checked(lower_series(a, z, opts), "gamma_q series");
    }
    return checked(upper_fraction(a, z, opts), "gamma_q continued fraction");
}

double upper_incomplete_gamma(double a, double z, const SeriesOptions& opts) {
    check_incgamma_args(a, z, "upper_incomplete_gamma");
    if (z == 0.0) return gamma(a);
    return gamma(a) * gamma_q(a, z, opts);
}

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

SpecialValue kummer_m(double a, double b, double z, const SeriesOptions& opts) {
    if (is_nonpositive_integer(b)) {
        throw DomainError("kummer_m: b must not be zero or a negative integer");
    }
    const ScaledSum s = kummer_series(a, b, z, opts);
    return {s.sum * std::exp(s.log_scale), s.converged, s.terms};
}

SpecialValue whittaker_m(double kappa, double mu, double z, const SeriesOptions& opts) {
    require_positive(z, "whittaker_m");
    const double b = 1.0 + 2.0 * mu;
    if (is_nonpositive_integer(b)) {
        throw DomainError("whittaker_m: 1 + 2 mu must not be zero or a negative integer");
    }
    const ScaledSum s = kummer_series(mu - kappa + 0.5, b, z, opts);
    if (!s.converged) return {0.0, false, s.terms};
    const double log_prefactor = -0.5 * z + (mu + 0.5) * std::log(z) + s.log_scale;
    return {std::exp(log_prefactor) * s.sum, true, s.terms};
}

double checked(const SpecialValue& v, const char* what) {
    if (!v.converged) {
        throw ConvergenceError(std::string(what) + ": no convergence after " +
                               std::to_string(v.terms_used) + " terms");
    }
    return v.value;
}

}  // namespace lindley::specfun
