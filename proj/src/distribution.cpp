#include "lindley/distribution.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "lindley/errors.hpp"
#include "lindley/specfun.hpp"

namespace lindley {

namespace sf = specfun;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

[[noreturn]] void bad_params(Family f, const std::string& why) {
    throw ParameterError(std::string(to_string(f)) + ": " + why);
}

void validate(Family f, const std::vector<double>& p) {
    const auto expected = static_cast<std::size_t>(parameter_count(f));
    if (p.size() != expected) {
        bad_params(f, "expected " + std::to_string(expected) + " parameters, got " +
                          std::to_string(p.size()));
    }
    if (!all_finite(p)) bad_params(f, "parameters must be finite");
    const auto positive = [&](std::initializer_list<std::size_t> idx) {
        for (auto i : idx) {
            if (!(p[i] > 0.0)) bad_params(f, "parameters must be positive");
        }
    };
    switch (f) {
        case Family::Lindley1: positive({0}); break;
        case Family::TPLD:
            positive({1});
            if (!(p[0] * p[1] > -1.0)) bad_params(f, "requires b*c > -1");
            break;
        case Family::PLD:
        case Family::NWL: positive({0, 1}); break;
        case Family::GLD:
        case Family::NGLD: positive({0, 1, 2}); break;
        case Family::DTL:
            positive({0});
            if (!(p[1] >= 0.0 && p[1] < p[2])) bad_params(f, "requires 0 <= x_l < x_u");
            break;
        case Family::Lognormal: positive({0, 1}); break;
    }
}

// Gamma(shape, rate) density, including the x = 0 edge.
double gamma_density(double x, double shape, double rate) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (shape < 1.0) return kInf;
        return shape == 1.0 ? rate : 0.0;
    }
    return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x -
                    sf::log_gamma(shape));
}

// Gamma(r + s) / Gamma(s) without overflow.
double rising_ratio(double s, int r) {
    return std::exp(sf::log_gamma(s + r) - sf::log_gamma(s));
}

// ---------------------------------------------------------------- Lindley1 / TPLD
// TPLD with b = 1 is the one-parameter Lindley distribution.

double tpld_pdf(double b, double c, double x) {
    if (x < 0.0) return 0.0;
    const double e = std::exp(-c * x);
    if (e == 0.0) return 0.0;  // far tail; avoids inf * 0
    return c * c * (b + x) * e / (b * c + 1.0);
}

double tpld_cdf(double b, double c, double x) {
    if (x <= 0.0) return 0.0;
    const double cx = c * x;
    const double e = std::exp(-cx);
    if (e == 0.0) return 1.0;
    return -std::expm1(-cx) - cx * e / (b * c + 1.0);
}

double tpld_sf(double b, double c, double x) {
    if (x <= 0.0) return 1.0;
    const double e = std::exp(-c * x);
    if (e == 0.0) return 0.0;
    return (b * c + c * x + 1.0) * e / (b * c + 1.0);
}

double tpld_raw(double b, double c, int r) {
    return (std::pow(c, 1.0 - r) * b * sf::gamma(r + 1.0) + std::pow(c, -r) * sf::gamma(r + 2.0)) /
           (b * c + 1.0);
}

// ---------------------------------------------------------------- PLD
// X^c follows a one-parameter Lindley law with parameter b.

double pld_pdf(double b, double c, double x) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (c < 1.0) return kInf;
        return c == 1.0 ? b * b / (b + 1.0) : 0.0;
    }
    const double y = std::pow(x, c);
    const double e = std::exp(-b * y);
    if (e == 0.0) return 0.0;
    return c * b * b * (1.0 + y) * std::pow(x, c - 1.0) * e / (b + 1.0);
}

double pld_raw(double b, double c, int r) {
    const double s = r / c;
    const double lb = std::log(b);
    return (std::exp((1.0 - s) * lb + sf::log_gamma(s + 1.0)) +
            std::exp(-s * lb + sf::log_gamma(s + 2.0))) /
           (b + 1.0);
}

double pld_mean(double b, double c) {
    const double inv = 1.0 / c;
    return (std::pow(b, -inv) * c + std::pow(b, (c - 1.0) / c) * c + std::pow(b, -inv)) *
           sf::gamma((c + 1.0) / c) / ((b + 1.0) * c);
}

// ---------------------------------------------------------------- GLD
// Mixture of Gamma(a, b) and Gamma(a + 1, b) with weights b/(b+c), c/(b+c).

double gld_pdf(double a, double b, double c, double x) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (a < 1.0) return kInf;
        return a == 1.0 ? b * b / (c + b) : 0.0;
    }
    const double bx = b * x;
    if (bx == kInf) return 0.0;
    return std::exp(2.0 * std::log(b) + (a - 1.0) * std::log(bx) + std::log(x) + std::log(c + a / x) - bx -
                    std::log(c + b) - sf::log_gamma(a + 1.0));
}

double gld_cdf(double a, double b, double c, double x) {
    if (x <= 0.0) return 0.0;
    const double z = b * x;
    return (b * sf::gamma_p(a, z) + c * sf::gamma_p(a + 1.0, z)) / (b + c);
}

double gld_sf(double a, double b, double c, double x) {
    if (x <= 0.0) return 1.0;
    const double z = b * x;
    return (b * sf::gamma_q(a, z) + c * sf::gamma_q(a + 1.0, z)) / (b + c);
}

double gld_raw(double a, double b, double c, int r) {
    return std::exp(sf::log_gamma(r + a) - sf::log_gamma(a + 1.0) - r * std::log(b)) *
           (c * a + c * r + b * a) / (c + b);
}

// ---------------------------------------------------------------- NGLD
// Mixture of Gamma(a, c) and Gamma(b, c) with weights c/(1+c), 1/(1+c).

double ngld_pdf(double a, double b, double c, double x) {
    if (x < 0.0) return 0.0;
    return (c * gamma_density(x, a, c) + gamma_density(x, b, c)) / (1.0 + c);
}

double ngld_cdf(double a, double b, double c, double x) {
    if (x <= 0.0) return 0.0;
    return (c * sf::gamma_p(a, c * x) + sf::gamma_p(b, c * x)) / (1.0 + c);
}

double ngld_sf(double a, double b, double c, double x) {
    if (x <= 0.0) return 1.0;
    return (c * sf::gamma_q(a, c * x) + sf::gamma_q(b, c * x)) / (1.0 + c);
}

double ngld_raw(double a, double b, double c, int r) {
    return (std::pow(c, 1.0 - r) * rising_ratio(a, r) + std::pow(c, -r) * rising_ratio(b, r)) /
           (1.0 + c);
}

// ---------------------------------------------------------------- NWL
// Density proportional to (1 + x)(e^{-cx} - e^{-c(1+b)x}).

double nwl_norm(double b, double c) {
    return c * c * (1.0 + b) * (1.0 + b) / (b * (c * b + b + c + 2.0));
}

// Integral of (1 + t) e^{-theta t} over [0, x].
double nwl_partial(double theta, double x) {
    const double z = theta * x;
    const double p1 = -std::expm1(-z);
    const double p2 = sf::gamma_p(2.0, z);
    return p1 / theta + p2 / (theta * theta);
}

// Integral of (1 + t) e^{-theta t} over [x, inf).
double nwl_tail(double theta, double x) {
    const double e = std::exp(-theta * x);
    if (e == 0.0) return 0.0;
    return e * ((1.0 + x) / theta + 1.0 / (theta * theta));
}

double nwl_pdf(double b, double c, double x) {
    if (x < 0.0) return 0.0;
    const double e = std::exp(-c * x);
    if (e == 0.0) return 0.0;
    return nwl_norm(b, c) * (1.0 + x) * -std::expm1(-c * b * x) * e;
}

double nwl_cdf(double b, double c, double x) {
    if (x <= 0.0) return 0.0;
    return nwl_norm(b, c) * (nwl_partial(c, x) - nwl_partial(c * (1.0 + b), x));
}

double nwl_sf(double b, double c, double x) {
    if (x <= 0.0) return 1.0;
    return nwl_norm(b, c) * (nwl_tail(c, x) - nwl_tail(c * (1.0 + b), x));
}

double nwl_mean(double b, double c) {
    return (b * b * c + 2.0 * b * b + 3.0 * c * b + 6.0 * b + 2.0 * c + 6.0) /
           ((c * b + b + c + 2.0) * c * (1.0 + b));
}

double nwl_raw(double b, double c, int r) {
    // c^-k - (c(1+b))^-k without the cancellation at small b
    const auto diff = [&](double k) { return std::pow(c, -k) * -std::expm1(-k * std::log1p(b)); };
    const double g1 = sf::gamma(r + 1.0);
    const double g2 = sf::gamma(r + 2.0);
    return nwl_norm(b, c) * (g1 * diff(r + 1.0) + g2 * diff(r + 2.0));
}

// ---------------------------------------------------------------- DTL
// With t = x - x_l, every quantity reduces to
//   I_k(w) = integral of t^k e^{-c t} over [0, w] = k! c^{-(k+1)} P(k+1, c w),
// which stays accurate for small c and never overflows for large c.

struct Dtl {
    double c, xl, xu;

    double moment_integral(int k, double w) const {
        if (w <= 0.0) return 0.0;
        return sf::gamma(k + 1.0) * std::pow(c, -(k + 1.0)) * sf::gamma_p(k + 1.0, c * w);
    }

    // integral of (x + 1) e^{-c (x - x_l)} over [x_l, x_l + w]
    double mass(double w) const {
        return (xl + 1.0) * moment_integral(0, w) + moment_integral(1, w);
    }

    double pdf(double x) const {
        if (x < xl || x > xu) return 0.0;
        return (x + 1.0) * std::exp(-c * (x - xl)) / mass(xu - xl);
    }

    double cdf(double x) const {
        if (x <= xl) return 0.0;
        if (x >= xu) return 1.0;
        return mass(x - xl) / mass(xu - xl);
    }

    double sf(double x) const {
        if (x <= xl) return 1.0;
        if (x >= xu) return 0.0;
        const double w = xu - x;
        const double upper = (x + 1.0) * moment_integral(0, w) + moment_integral(1, w);
        return std::exp(-c * (x - xl)) * upper / mass(xu - xl);
    }

    // E[X^r] by binomial expansion of (x_l + t)^r (x_l + 1 + t); all terms are
    // nonnegative.
    double moment_stable(int r) const {
        const double w = xu - xl;
        double acc = 0.0;
        double binom = 1.0;
        for (int k = 0; k <= r; ++k) {
            const double lead = binom * std::pow(xl, r - k);
            acc += lead * ((xl + 1.0) * moment_integral(k, w) + moment_integral(k + 1, w));
            binom = binom * (r - k) / (k + 1.0);
        }
        return acc / mass(w);
    }

    double mean() const { return moment_stable(1); }

    // Closed form through the Whittaker M function:
    //   x^{r/2} e^{-cx/2} (c^{1-r/2} + c^{-r/2}(r+1)) M_{r/2, r/2+1/2}(c x)
    // evaluated at both bounds, plus the boundary terms c(r+1) x^{r+1} e^{-cx}.
    double moment_whittaker(int r) const {
        const double half = 0.5 * r;
        const double coef = std::pow(c, 1.0 - half) + std::pow(c, -half) * (r + 1.0);
        const auto bound_term = [&](double x) {
            if (x <= 0.0) return 0.0;
            const double m = sf::checked(sf::whittaker_m(half, half + 0.5, c * x),
                                         "DTL moment Whittaker M");
            return std::pow(x, half) * std::exp(-0.5 * c * x) * coef * m;
        };
        const double numerator =
            -bound_term(xl) + bound_term(xu) +
            c * (r + 1.0) *
                (std::exp(-c * xl) * std::pow(xl, r + 1.0) - std::exp(-c * xu) * std::pow(xu, r + 1.0));
        const double denominator =
            ((1.0 + (xl + 1.0) * c) * std::exp(-c * xl) - (1.0 + (xu + 1.0) * c) * std::exp(-c * xu)) *
            (r + 1.0);
        return numerator / denominator;
    }
};

Dtl as_dtl(std::span<const double> p) { return {p[0], p[1], p[2]}; }

// ---------------------------------------------------------------- Lognormal

double lognormal_pdf(double m, double s, double x) {
    if (x <= 0.0) return 0.0;
    const double z = std::log(x / m) / s;
    return std::exp(-0.5 * z * z) / (x * s * std::sqrt(2.0 * std::numbers::pi));
}

double lognormal_cdf(double m, double s, double x) {
    if (x <= 0.0) return 0.0;
    return 0.5 * sf::erfc(-std::log(x / m) / (s * std::numbers::sqrt2));
}

double lognormal_sf(double m, double s, double x) {
    if (x <= 0.0) return 1.0;
    return 0.5 * sf::erfc(std::log(x / m) / (s * std::numbers::sqrt2));
}

// ---------------------------------------------------------------- sampling

double uniform_open(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

double invert_cdf(const DistributionSpec& spec, double u) {
    const Support s = support(spec);
    double lo = s.lower;
    double hi = s.upper;
    if (std::isinf(hi)) {
        hi = 1.0;
        while (cdf(spec, hi) <= u) {
            hi *= 2.0;
            if (!std::isfinite(hi)) throw ConvergenceError("sample: no upper bracket for quantile");
        }
    }
    constexpr int max_iter = 200;
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-15 * std::abs(hi) || mid == lo || mid == hi) return mid;
        if (cdf(spec, mid) <= u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError("sample: quantile bisection did not converge in 200 iterations");
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Lindley1: return "Lindley1";
        case Family::TPLD: return "TPLD";
        case Family::PLD: return "PLD";
        case Family::GLD: return "GLD";
        case Family::NGLD: return "NGLD";
        case Family::NWL: return "NWL";
        case Family::DTL: return "DTL";
        case Family::Lognormal: return "Lognormal";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "lindley") return Family::Lindley1;
    for (Family f : kAllFamilies) {
        std::string candidate(to_string(f));
        std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        if (candidate == lower) return f;
    }
    return std::nullopt;
}

int parameter_count(Family f) {
    switch (f) {
        case Family::Lindley1: return 1;
        case Family::TPLD:
        case Family::PLD:
        case Family::NWL:
        case Family::Lognormal: return 2;
        case Family::GLD:
        case Family::NGLD:
        case Family::DTL: return 3;
    }
    return 0;
}

std::vector<std::string_view> parameter_names(Family f) {
    switch (f) {
        case Family::Lindley1: return {"c"};
        case Family::TPLD:
        case Family::PLD:
        case Family::NWL: return {"b", "c"};
        case Family::GLD:
        case Family::NGLD: return {"a", "b", "c"};
        case Family::DTL: return {"c", "x_l", "x_u"};
        case Family::Lognormal: return {"m", "sigma"};
    }
    return {};
}

DistributionSpec::DistributionSpec(Family family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {
    validate(family_, params_);
}

Support support(const DistributionSpec& spec) {
    if (spec.family() == Family::DTL) return {spec[1], spec[2]};
    return {0.0, kInf};
}

double pdf(const DistributionSpec& spec, double x) {
    const auto p = spec.params();
    switch (spec.family()) {
        case Family::Lindley1: return tpld_pdf(1.0, p[0], x);
        case Family::TPLD: return tpld_pdf(p[0], p[1], x);
        case Family::PLD: return pld_pdf(p[0], p[1], x);
        case Family::GLD: return gld_pdf(p[0], p[1], p[2], x);
        case Family::NGLD: return ngld_pdf(p[0], p[1], p[2], x);
        case Family::NWL: return nwl_pdf(p[0], p[1], x);
        case Family::DTL: return as_dtl(p).pdf(x);
        case Family::Lognormal: return lognormal_pdf(p[0], p[1], x);
    }
    return 0.0;
}

double cdf(const DistributionSpec& spec, double x) {
    const auto p = spec.params();
    switch (spec.family()) {
        case Family::Lindley1: return tpld_cdf(1.0, p[0], x);
        case Family::TPLD: return tpld_cdf(p[0], p[1], x);
        case Family::PLD: return x <= 0.0 ? 0.0 : tpld_cdf(1.0, p[0], std::pow(x, p[1]));
        case Family::GLD: return gld_cdf(p[0], p[1], p[2], x);
        case Family::NGLD: return ngld_cdf(p[0], p[1], p[2], x);
        case Family::NWL: return nwl_cdf(p[0], p[1], x);
        case Family::DTL: return as_dtl(p).cdf(x);
        case Family::Lognormal: return lognormal_cdf(p[0], p[1], x);
    }
    return 0.0;
}

double survival(const DistributionSpec& spec, double x) {
    const auto p = spec.params();
    switch (spec.family()) {
        case Family::Lindley1: return tpld_sf(1.0, p[0], x);
        case Family::TPLD: return tpld_sf(p[0], p[1], x);
        case Family::PLD: return x <= 0.0 ? 1.0 : tpld_sf(1.0, p[0], std::pow(x, p[1]));
        case Family::GLD: return gld_sf(p[0], p[1], p[2], x);
        case Family::NGLD: return ngld_sf(p[0], p[1], p[2], x);
        case Family::NWL: return nwl_sf(p[0], p[1], x);
        case Family::DTL: return as_dtl(p).sf(x);
        case Family::Lognormal: return lognormal_sf(p[0], p[1], x);
    }
    return 1.0;
}

double mean(const DistributionSpec& spec) {
    const auto p = spec.params();
    switch (spec.family()) {
        case Family::Lindley1: return (2.0 + p[0]) / (p[0] * (1.0 + p[0]));
        case Family::TPLD: {
            const double bc = p[0] * p[1];
            return (bc + 2.0) / (p[1] * (bc + 1.0));
        }
        case Family::PLD: return pld_mean(p[0], p[1]);
        case Family::GLD: {
            const double a = p[0], b = p[1], c = p[2];
            return (a * b + a * c + c) / (b * (c + b));
        }
        case Family::NGLD: return (p[0] * p[2] + p[1]) / (p[2] * (1.0 + p[2]));
        case Family::NWL: return nwl_mean(p[0], p[1]);
        case Family::DTL: return as_dtl(p).mean();
        case Family::Lognormal: return p[0] * std::exp(0.5 * p[1] * p[1]);
    }
    return 0.0;
}

double variance(const DistributionSpec& spec) {
    const auto p = spec.params();
    switch (spec.family()) {
        case Family::Lindley1: {
            const double c = p[0];
            return (c * c + 4.0 * c + 2.0) / (c * c * (1.0 + c) * (1.0 + c));
        }
        case Family::TPLD: {
            const double b = p[0], c = p[1], bc = b * c;
            return (bc * bc + 4.0 * bc + 2.0) / (c * c * (bc + 1.0) * (bc + 1.0));
        }
        case Family::GLD: {
            const double a = p[0], b = p[1], c = p[2];
            return (a * b * b + 2.0 * c * b * a + c * c * a + 2.0 * c * b + c * c) /
                   (b * b * (c + b) * (c + b));
        }
        case Family::NGLD: {
            const double a = p[0], b = p[1], c = p[2];
            return (a * a * c - 2.0 * a * b * c + a * c * c + b * b * c + a * c + b * c + b) /
                   (c * c * (1.0 + c) * (1.0 + c));
        }
        case Family::Lognormal: {
            const double e = std::exp(p[1] * p[1]);
            return e * (e - 1.0) * p[0] * p[0];
        }
        case Family::PLD:
        case Family::NWL: {
            const double m = mean(spec);
            return raw_moment(spec, 2) - m * m;
        }
        case Family::DTL: {
            const Dtl d = as_dtl(p);
            const double m = d.mean();
            return d.moment_stable(2) - m * m;
        }
    }
    return 0.0;
}

double raw_moment(const DistributionSpec& spec, int r) {
    if (r < 1) throw DomainError("raw_moment: order must be >= 1");
    const auto p = spec.params();
    switch (spec.family()) {
        case Family::Lindley1: {
            const double c = p[0];
            return (std::pow(c, -r) * sf::gamma(r + 2.0) + std::pow(c, 1.0 - r) * sf::gamma(r + 1.0)) /
                   (1.0 + c);
        }
        case Family::TPLD: return tpld_raw(p[0], p[1], r);
        case Family::PLD: return pld_raw(p[0], p[1], r);
        case Family::GLD: return gld_raw(p[0], p[1], p[2], r);
        case Family::NGLD: return ngld_raw(p[0], p[1], p[2], r);
        case Family::NWL: return nwl_raw(p[0], p[1], r);
        case Family::DTL: return as_dtl(p).moment_whittaker(r);
        case Family::Lognormal: return std::pow(p[0], r) * std::exp(0.5 * r * r * p[1] * p[1]);
    }
    return 0.0;
}

std::pair<double, double> central_moments_34(const DistributionSpec& spec) {
    if (spec.family() != Family::Lindley1) {
        throw FamilyError("central_moments_34 is only available for Lindley1");
    }
    const double c = spec[0];
    const double c2 = c * c, c3 = c2 * c, c4 = c3 * c;
    const double q = 1.0 + c;
    const double mu3 = (2.0 * c3 + 12.0 * c2 + 12.0 * c + 4.0) / (c3 * q * q * q);
    const double mu4 = (9.0 * c4 + 72.0 * c3 + 132.0 * c2 + 96.0 * c + 24.0) / (c4 * q * q * q * q);
    return {mu3, mu4};
}

Mode mode(const DistributionSpec& spec) {
    const auto p = spec.params();
    double m = 0.0;
    switch (spec.family()) {
        case Family::TPLD: m = (1.0 - p[0] * p[1]) / p[1]; break;
        case Family::PLD: {
            // The stationary point is expressed in y = x^c.
            const double b = p[0], c = p[1];
            const double y = (-c * b + std::sqrt(1.0 + (b * b + 4.0) * c * c + (-2.0 * b - 4.0) * c) +
                              2.0 * c - 1.0) /
                             (2.0 * c * b);
            m = y > 0.0 ? std::pow(y, 1.0 / c) : y;
            break;
        }
        case Family::GLD: {
            const double a = p[0], b = p[1], c = p[2];
            const double disc = a * a * b * b + 2.0 * a * a * b * c + a * a * c * c - 4.0 * a * b * c;
            m = disc >= 0.0 ? (-a * b + a * c + std::sqrt(disc)) / (2.0 * b * c) : -1.0;
            break;
        }
        default:
            throw FamilyError("mode has no closed form for " + std::string(to_string(spec.family())));
    }
    if (!(m > 0.0)) return {support(spec).lower, true};
    return {m, false};
}

namespace {

// Numerator of the closed-form GLD CDF, times 1 / ((c + b) Gamma(a + 2)).
double gld_whittaker_part(double a, double b, double c, double x) {
    const double z = b * x;
    const double m = sf::checked(sf::whittaker_m(0.5 * a, 0.5 * a + 0.5, z), "GLD Whittaker M");
    const double lead = std::exp(-0.5 * z + 0.5 * a * std::log(x)) *
                        (c * std::pow(b, 0.5 * a) + std::pow(b, 0.5 * a + 1.0)) * m;
    const double tail = std::exp((a + 1.0) * std::log(b) + a * std::log(x) - z) * (a + 1.0);
    return (lead + tail) / ((c + b) * sf::gamma(a + 2.0));
}

}  // namespace

double gld_cdf_whittaker(double a, double b, double c, double x) {
    DistributionSpec::gld(a, b, c);  // validates
    if (x <= 0.0) return 0.0;
    return gld_whittaker_part(a, b, c, x);
}

double gld_hazard_whittaker(double a, double b, double c, double x) {
    DistributionSpec::gld(a, b, c);
    if (x <= 0.0) throw DomainError("GLD hazard: x must be positive");
    const double num = -std::exp((a + 1.0) * std::log(b) + (a - 1.0) * std::log(x) - b * x) *
                       (c * x + a) * (a + 1.0);
    return num / ((gld_whittaker_part(a, b, c, x) - 1.0) * (c + b) * sf::gamma(a + 2.0));
}

double hazard(const DistributionSpec& spec, double x) {
    const Support s = support(spec);
    if (!(x >= s.lower && x < s.upper)) {
        throw DomainError("hazard: x must lie inside the support");
    }
    const double surv = survival(spec, x);
    if (!(surv >= 1e-300)) {
        throw SurvivalUnderflowError("hazard: survival function underflowed at x = " +
                                     std::to_string(x));
    }
    return pdf(spec, x) / surv;
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<double> out;
    out.reserve(n);
    if (spec.family() == Family::Lindley1) {
        // Exp(c) with weight c/(1+c), otherwise Gamma(2, c).
        const double c = spec[0];
        const double w = c / (1.0 + c);
        for (std::size_t i = 0; i < n; ++i) {
            double x = -std::log(uniform_open(gen)) / c;
            if (uniform_open(gen) >= w) x -= std::log(uniform_open(gen)) / c;
            out.push_back(x);
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) out.push_back(invert_cdf(spec, uniform_open(gen)));
    return out;
}

}  // namespace lindley
