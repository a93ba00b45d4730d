#pragma once

// Special functions used by the closed-form distribution expressions:
// gamma, incomplete gamma, error function and the confluent hypergeometric
// (Kummer / Whittaker) family. All functions are pure and thread-safe.

namespace lindley::specfun {

struct SeriesOptions {
    int max_terms = 500;
    double rel_tol = 1e-14;
};

/// Result of a series evaluation. `value` must not be used when
/// `converged` is false.
struct SpecialValue {
    double value = 0.0;
    bool converged = false;
    int terms_used = 0;
};

/// Gamma function for z > 0 (Lanczos approximation, g = 7, n = 9).
double gamma(double z);

/// ln Gamma(z) for z > 0.
double log_gamma(double z);

/// Regularized lower incomplete gamma P(a, z).
double gamma_p(double a, double z, const SeriesOptions& opts = {});

/// Regularized upper incomplete gamma Q(a, z) = 1 - P(a, z).
double gamma_q(double a, double z, const SeriesOptions& opts = {});

/// Upper incomplete gamma Gamma(a, z) = integral of t^(a-1) e^(-t) over [z, inf).
double upper_incomplete_gamma(double a, double z, const SeriesOptions& opts = {});

double erf(double x);
double erfc(double x);

/// Kummer's confluent hypergeometric function M(a, b, z) = 1F1(a; b; z) by
/// direct summation.
SpecialValue kummer_m(double a, double b, double z, const SeriesOptions& opts = {});

/// Whittaker M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} M(mu - kappa + 1/2, 1 + 2 mu, z).
SpecialValue whittaker_m(double kappa, double mu, double z, const SeriesOptions& opts = {});

/// Throws ConvergenceError when `v` did not converge; returns the value otherwise.
double checked(const SpecialValue& v, const char* what);

}  // namespace lindley::specfun
