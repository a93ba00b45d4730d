#pragma once

// Long published closed forms, transcribed term by term. The library
// evaluates equivalent but better-conditioned expressions; these serve as
// oracles. Gamma functions come from Boost so the check is independent of
// lindley::specfun.

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

namespace closed_form {

using boost::math::tgamma;

// upper incomplete gamma, non-normalised
inline double G(double s, double z) { return tgamma(s, z); }

inline double ngld_cdf(double x, double a, double b, double c) {
    const double e = std::exp(-c * x);
    const double gb2 = tgamma(b + 2), ga2 = tgamma(a + 2);
    const double xa = std::pow(x, a) * std::pow(c, a + 1) * e;
    const double xb = std::pow(x, b) * std::pow(c, b) * e;
    const double nb = gb2 * xa * a + ga2 * xb * b - gb2 * c * G(a + 1, c * x) * a + gb2 * xa + ga2 * xb -
                      gb2 * c * G(a + 1, c * x) + gb2 * ga2 * c - ga2 * G(b + 1, c * x) * b + gb2 * ga2 -
                      ga2 * G(b + 1, c * x);
    return nb / ((1 + c) * gb2 * ga2);
}

inline double nwl_cdf(double x, double b, double c) {
    const double E = std::exp(-c * x), F = std::exp(-c * (1 + b) * x);
    const double nc = -E * b * b * c * x + F * b * c * x - E * b * b * c - 2 * E * b * c * x + F * b * c +
                      F * c * x - E * b * b - 2 * E * b * c - E * c * x + b * b * c + F * c - 2 * E * b -
                      E * c + b * b + c * b + F - E + 2 * b;
    return nc / (b * (c * b + b + c + 2));
}

inline double nwl_mean(double b, double c) {
    return (b * b * c + 2 * b * b + 3 * c * b + 6 * b + 2 * c + 6) / ((c * b + b + c + 2) * c * (1 + b));
}

inline double nwl_variance(double b, double c) {
    const double nd = std::pow(b, 4) * c * c + 4 * std::pow(b, 4) * c + 4 * std::pow(b, 3) * c * c +
                      2 * std::pow(b, 4) + 18 * std::pow(b, 3) * c + 7 * b * b * c * c +
                      12 * std::pow(b, 3) + 32 * b * b * c + 6 * b * c * c + 24 * b * b + 30 * b * c +
                      2 * c * c + 24 * b + 12 * c + 12;
    const double k = b * c + b + c + 2;
    return nd / (c * c * k * k * (1 + b) * (1 + b));
}

inline double nwl_raw_moment(double b, double c, int r) {
    const double q = (1 + b) / b;
    auto P = [](double base, double e) { return std::pow(base, e); };
    const double ne =
        -(P(c, 1 - r) * P(b, 1 - r) * P(q, -r) + P(b, -r) * P(q, -r) * P(c, -r) * r -
          P(c, -r) * b * b * r + P(c, 1 - r) * P(b, -r) * P(q, -r) - P(c, 1 - r) * b * b +
          P(b, -r) * P(q, -r) * P(c, -r) - P(c, -r) * b * b - 2 * P(c, -r) * b * r - 2 * P(c, 1 - r) * b -
          2 * P(c, -r) * b - P(c, -r) * r - P(c, 1 - r) - P(c, -r)) *
        tgamma(1.0 + r);
    return ne / (b * (b * c + b + c + 2));
}

inline double pld_mean(double b, double c) {
    const double g1 = tgamma((c + 1) / c);
    return (std::pow(b, -1 / c) * c + std::pow(b, (c - 1) / c) * c + std::pow(b, -1 / c)) * g1 / ((b + 1) * c);
}

inline double pld_variance(double b, double c) {
    const double g1 = tgamma((c + 1) / c), g2 = tgamma((c + 2) / c);
    const double p0 = std::pow(b, -2 / c), p1 = std::pow(b, (2 * c - 2) / c), p2 = std::pow(b, (c - 2) / c);
    const double na = -p0 * g1 * g1 * c * c + p0 * g2 * b * c * c - p1 * g1 * g1 * c * c -
                      2 * g1 * g1 * p2 * c * c + p2 * g2 * b * c * c - 2 * p0 * g1 * g1 * c +
                      2 * p0 * g2 * b * c + p0 * g2 * c * c - 2 * g1 * g1 * p2 * c + p2 * g2 * c * c -
                      p0 * g1 * g1 + 2 * p0 * g2 * c;
    return na / ((b + 1) * (b + 1) * c * c);
}

inline double dtl_cdf(double x, double c, double xl, double xu) {
    const double nf = -std::exp(c * (xl + xu)) *
                      (-std::pow(1 + (xl + 1) * c, 2) * std::exp(-c * (xl - xu)) -
                       (1 + (x + 1) * c) * (1 + (xu + 1) * c) * std::exp(c * (-x + xl)) +
                       ((1 + (x + 1) * c) * std::exp(c * (-x + xu)) + 1 + (xu + 1) * c) * (1 + (xl + 1) * c));
    const double den = std::pow((-1 + (-xu - 1) * c) * std::exp(c * xl) + (1 + (xl + 1) * c) * std::exp(c * xu), 2);
    return nf / den;
}

inline double dtl_mean(double c, double xl, double xu) {
    const double num = (2 + (xu * xu + xu) * c * c + (2 * xu + 1) * c) * std::exp(c * xl) -
                       std::exp(c * xu) * (2 + (xl * xl + xl) * c * c + (2 * xl + 1) * c);
    return num / (-c * ((-1 + (-xu - 1) * c) * std::exp(c * xl) + std::exp(c * xu) * (1 + (xl + 1) * c)));
}

}  // namespace closed_form
