#pragma once

#include <vector>

#include "lindley/catalog.hpp"
#include "lindley/distribution.hpp"

namespace lindley {

/// Sample quantities matched by the method-of-moments estimators.
struct MomentTargets {
    double xbar = 0.0;   // sample mean
    double s2 = 0.0;     // unbiased sample variance
    double xbar3 = 0.0;  // third raw sample moment
    double x_min = 0.0;
    double x_max = 0.0;
};

MomentTargets moment_targets(const SampleSummary& summary);

/// Exact population moments of `spec`, packaged as estimator targets. For
/// unbounded families x_min = 0 and x_max = +inf.
MomentTargets forward_targets(const DistributionSpec& spec);

struct SolveReport {
    DistributionSpec spec;
    /// Model minus target for each matched equation.
    std::vector<double> residuals;
    int iterations = 0;
    bool converged = false;
    /// Further distinct parameter vectors that also solve the moment
    /// equations (multistart solves only).
    std::vector<DistributionSpec> alternatives;
};

struct NewtonOptions {
    int max_iterations = 100;
    int max_halvings = 30;
    /// Convergence: max |model moment - target| on the matched equations.
    double tolerance = 1e-10;
};

/// Solves mean(c) = xbar by bracketed root finding over c in [1e-6, 1e6].
SolveReport estimate_lindley1(const MomentTargets& t);

/// Closed-form two-parameter Lindley estimator. Throws InfeasibleMomentsError
/// when s2 >= xbar^2.
SolveReport estimate_tpld(const MomentTargets& t);

/// PLD or NWL: mean and variance matched by damped Newton with multistart.
SolveReport estimate_two_param(Family family, const MomentTargets& t, const NewtonOptions& opts = {});

/// GLD or NGLD: mean, variance and third raw moment matched by damped Newton
/// with multistart.
SolveReport estimate_three_param(Family family, const MomentTargets& t, const NewtonOptions& opts = {});

/// x_l = x_min, x_u = x_max, then mean(c) = xbar over c in [1e-6, 1e3].
SolveReport estimate_dtl(const MomentTargets& t);

/// Lognormal from mean and variance: sigma^2 = ln(1 + s2 / xbar^2), m = xbar e^{-sigma^2/2}.
SolveReport estimate_lognormal(const MomentTargets& t);

/// Dispatches to the estimator for `family`.
SolveReport estimate(Family family, const MomentTargets& t);

}  // namespace lindley
