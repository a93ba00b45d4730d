#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace lindley {

/// The eight supported families. Parameter order per family:
///   Lindley1  [c]
///   TPLD      [b, c]
///   PLD       [b, c]
///   GLD       [a, b, c]
///   NGLD      [a, b, c]
///   NWL       [b, c]
///   DTL       [c, x_l, x_u]
///   Lognormal [m, sigma]   (m is the median)
enum class Family { Lindley1, TPLD, PLD, GLD, NGLD, NWL, DTL, Lognormal };

inline constexpr std::array<Family, 8> kAllFamilies = {
    Family::Lindley1, Family::TPLD, Family::PLD, Family::GLD,
    Family::NGLD,     Family::NWL,  Family::DTL, Family::Lognormal};

std::string_view to_string(Family f);

/// Case-insensitive lookup of a family by its short name ("gld", "Lognormal", ...).
std::optional<Family> family_from_string(std::string_view name);

/// Number of free parameters k, as used in AIC and degrees of freedom.
/// DTL counts its truncation bounds.
int parameter_count(Family f);

/// Immutable family tag plus validated parameter vector.
class DistributionSpec {
public:
    /// Throws ParameterError when the parameters violate the family constraints.
    DistributionSpec(Family family, std::vector<double> params);

    static DistributionSpec lindley1(double c) { return {Family::Lindley1, {c}}; }
    static DistributionSpec tpld(double b, double c) { return {Family::TPLD, {b, c}}; }
    static DistributionSpec pld(double b, double c) { return {Family::PLD, {b, c}}; }
    static DistributionSpec gld(double a, double b, double c) { return {Family::GLD, {a, b, c}}; }
    static DistributionSpec ngld(double a, double b, double c) { return {Family::NGLD, {a, b, c}}; }
    static DistributionSpec nwl(double b, double c) { return {Family::NWL, {b, c}}; }
    static DistributionSpec dtl(double c, double x_lower, double x_upper) {
        return {Family::DTL, {c, x_lower, x_upper}};
    }
    static DistributionSpec lognormal(double median, double sigma) {
        return {Family::Lognormal, {median, sigma}};
    }

    Family family() const noexcept { return family_; }
    std::span<const double> params() const noexcept { return params_; }
    double operator[](std::size_t i) const { return params_.at(i); }

    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

private:
    Family family_;
    std::vector<double> params_;
};

/// Names of the parameters of `f`, in order.
std::vector<std::string_view> parameter_names(Family f);

struct Support {
    double lower = 0.0;
    double upper = 0.0;  // +inf for unbounded families
};

Support support(const DistributionSpec& spec);

double pdf(const DistributionSpec& spec, double x);
double cdf(const DistributionSpec& spec, double x);

/// 1 - cdf, evaluated without cancellation in the upper tail.
double survival(const DistributionSpec& spec, double x);

double mean(const DistributionSpec& spec);
double variance(const DistributionSpec& spec);

/// E[X^r] for r >= 1.
double raw_moment(const DistributionSpec& spec, int r);

/// Third and fourth central moments; Lindley1 only.
std::pair<double, double> central_moments_34(const DistributionSpec& spec);

struct Mode {
    double value = 0.0;
    /// True when the interior stationary point does not exist and the mode
    /// sits on the lower edge of the support (decreasing density).
    bool at_boundary = false;
};

/// Closed-form mode for TPLD, PLD and GLD. For GLD with a < 1 the density
/// is unbounded at 0 and the returned interior point is only a local maximum.
Mode mode(const DistributionSpec& spec);

/// pdf / (1 - cdf). Throws SurvivalUnderflowError once the survival drops
/// below 1e-300.
double hazard(const DistributionSpec& spec, double x);

/// GLD CDF written with the Whittaker function M_{a/2, a/2+1/2}(bx). Agrees
/// with cdf() but loses accuracy once bx is large (the Kummer series and the
/// exponential prefactors cancel); cdf() uses the gamma-mixture form instead.
double gld_cdf_whittaker(double a, double b, double c, double x);

/// GLD hazard from the same closed form.
double gld_hazard_whittaker(double a, double b, double c, double x);

/// n independent draws, reproducible for a given seed.
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace lindley
