#include "lindley/estimation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "lindley/errors.hpp"
#include "roots.hpp"

namespace lindley {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Multistart grid, applied to every parameter.
constexpr std::array<double, 6> kStartGrid = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

// Newton runs in log-parameter space; iterates beyond this bound are rejected.
constexpr double kLogParamBound = 25.0;

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;
template <int N>
using Mat = Eigen::Matrix<double, N, N>;

void require_positive_targets(const MomentTargets& t, bool need_third) {
    if (!(t.xbar > 0.0) || !std::isfinite(t.xbar)) {
        throw InfeasibleMomentsError("sample mean must be positive");
    }
    if (!(t.s2 > 0.0) || !std::isfinite(t.s2)) {
        throw InfeasibleMomentsError("sample variance must be positive");
    }
    if (need_third && (!(t.xbar3 > 0.0) || !std::isfinite(t.xbar3))) {
        throw InfeasibleMomentsError("third raw sample moment must be positive");
    }
}

template <int N>
Vec<N> target_vector(const MomentTargets& t) {
    Vec<N> v;
    v(0) = t.xbar;
    v(1) = t.s2;
    if constexpr (N == 3) v(2) = t.xbar3;
    return v;
}

template <int N>
DistributionSpec spec_from_log(Family family, const Vec<N>& theta) {
    std::vector<double> p(N);
    for (int i = 0; i < N; ++i) p[i] = std::exp(theta(i));
    return {family, std::move(p)};
}

// Model moments matched against the targets: mean, variance and (N = 3) the
// third raw moment. Returns NaNs when the parameters are unusable.
template <int N>
Vec<N> model_moments(Family family, const Vec<N>& theta) {
    Vec<N> out = Vec<N>::Constant(std::numeric_limits<double>::quiet_NaN());
    if ((theta.array().abs() > kLogParamBound).any()) return out;
    try {
        const DistributionSpec spec = spec_from_log<N>(family, theta);
        out(0) = mean(spec);
        out(1) = variance(spec);
        if constexpr (N == 3) out(2) = raw_moment(spec, 3);
    } catch (const Error&) {
        out.setConstant(std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

template <int N>
struct NewtonResult {
    Vec<N> theta;
    Vec<N> residual;  // unscaled, model - target
    int iterations = 0;
    bool converged = false;
};

// Damped Newton on the relative residuals (model - target) / target with a
// central-difference Jacobian in log-parameter space.
template <int N>
NewtonResult<N> damped_newton(Family family, const Vec<N>& target, Vec<N> theta,
                              const NewtonOptions& opts) {
    const auto scaled = [&](const Vec<N>& th) -> Vec<N> {
        return (model_moments<N>(family, th) - target).cwiseQuotient(target);
    };
    NewtonResult<N> res;
    Vec<N> r = scaled(theta);
    if (!r.allFinite()) {
        res.theta = theta;
        res.residual = r;
        return res;
    }
    constexpr double h = 1e-6;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        if (r.norm() < 1e-15) break;
        Mat<N> jac;
        bool jac_ok = true;
        for (int j = 0; j < N; ++j) {
            Vec<N> up = theta, down = theta;
            up(j) += h;
            down(j) -= h;
            jac.col(j) = (scaled(up) - scaled(down)) / (2.0 * h);
            jac_ok = jac_ok && jac.col(j).allFinite();
        }
        if (!jac_ok) break;
        const Eigen::FullPivLU<Mat<N>> lu(jac);
        Vec<N> step = Vec<N>::Zero();
        bool accepted = false;
        if (lu.isInvertible()) {
            const Vec<N> full = lu.solve(-r);
            double lambda = 1.0;
            for (int k = 0; k <= opts.max_halvings; ++k, lambda *= 0.5) {
                const Vec<N> trial = theta + lambda * full;
                const Vec<N> rt = scaled(trial);
                if (rt.allFinite() && rt.norm() < r.norm()) {
                    step = lambda * full;
                    r = rt;
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted) {
            // Newton direction useless (singular or no descent): fall back to
            // Levenberg-Marquardt steps of growing damping.
            const Mat<N> jtj = jac.transpose() * jac;
            const Vec<N> grad = jac.transpose() * r;
            const Mat<N> diag = jtj.diagonal().cwiseMax(1e-12).asDiagonal();
            for (double mu = 1e-6; mu <= 1e8 && !accepted; mu *= 10.0) {
                const Vec<N> trial_step = (jtj + mu * diag).ldlt().solve(-grad);
                const Vec<N> rt = scaled(theta + trial_step);
                if (trial_step.allFinite() && rt.allFinite() && rt.norm() < r.norm()) {
                    step = trial_step;
                    r = rt;
                    accepted = true;
                }
            }
        }
        if (!accepted) break;
        theta += step;
        if (step.norm() < 1e-15) break;
    }
    res.theta = theta;
    res.iterations = iter;
    res.residual = r.cwiseProduct(target);
    res.converged = res.residual.allFinite() && res.residual.cwiseAbs().maxCoeff() <= opts.tolerance;
    return res;
}

bool same_root(std::span<const double> p, std::span<const double> q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double scale = std::max(std::abs(p[i]), std::abs(q[i]));
        if (std::abs(p[i] - q[i]) > 1e-6 * scale) return false;
    }
    return true;
}

template <int N>
SolveReport multistart(Family family, const MomentTargets& t, const NewtonOptions& opts) {
    const Vec<N> target = target_vector<N>(t);

    struct Candidate {
        NewtonResult<N> result;
        std::vector<double> params;
        double norm;
    };
    std::vector<Candidate> roots;
    double best_norm = kInf;
    std::vector<double> best_params;

    constexpr std::size_t grid = kStartGrid.size();
    std::size_t total = 1;
    for (int i = 0; i < N; ++i) total *= grid;

    // Starts in a fixed order (first parameter varies slowest).
    for (std::size_t flat = 0; flat < total; ++flat) {
        Vec<N> start;
        std::size_t rem = flat;
        for (int i = N - 1; i >= 0; --i) {
            start(i) = std::log(kStartGrid[rem % grid]);
            rem /= grid;
        }
        NewtonResult<N> r = damped_newton<N>(family, target, start, opts);
        std::vector<double> params(N);
        for (int i = 0; i < N; ++i) params[i] = std::exp(r.theta(i));
        const double norm = r.residual.allFinite() ? r.residual.norm() : kInf;
        if (norm < best_norm) {
            best_norm = norm;
            best_params = params;
        }
        if (!r.converged) continue;
        const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](const Candidate& c) {
            return same_root(c.params, params);
        });
        if (!duplicate) roots.push_back({r, params, norm});
    }

    if (roots.empty()) {
        std::ostringstream msg;
        msg << to_string(family) << ": no multistart Newton run converged; best residual norm "
            << best_norm;
        if (!best_params.empty()) {
            msg << " at (";
            for (std::size_t i = 0; i < best_params.size(); ++i) msg << (i ? ", " : "") << best_params[i];
            msg << ")";
        }
        throw ConvergenceError(msg.str());
    }

    // Smallest residual norm wins; norms within the convergence tolerance of
    // each other count as tied and fall back to the lexicographically smallest
    // parameter vector.
    const double min_norm =
        std::min_element(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
            return a.norm < b.norm;
        })->norm;
    std::stable_sort(roots.begin(), roots.end(), [&](const Candidate& a, const Candidate& b) {
        const bool a_tied = a.norm <= min_norm + opts.tolerance;
        const bool b_tied = b.norm <= min_norm + opts.tolerance;
        if (a_tied != b_tied) return a_tied;
        if (!a_tied) return a.norm < b.norm;
        return a.params < b.params;
    });

    const Candidate& chosen = roots.front();
    SolveReport report{DistributionSpec(family, chosen.params),
                       std::vector<double>(chosen.result.residual.data(),
                                           chosen.result.residual.data() + N),
                       chosen.result.iterations, true, {}};
    for (std::size_t i = 1; i < roots.size(); ++i) {
        report.alternatives.emplace_back(family, roots[i].params);
    }
    return report;
}

}  // namespace

MomentTargets moment_targets(const SampleSummary& summary) {
    return {summary.xbar, summary.s2,
            summary.raw_moments.size() >= 3 ? summary.raw_moments[2] : 0.0, summary.x_min,
            summary.x_max};
}

MomentTargets forward_targets(const DistributionSpec& spec) {
    const Support s = support(spec);
    return {mean(spec), variance(spec), raw_moment(spec, 3), s.lower, s.upper};
}

SolveReport estimate_lindley1(const MomentTargets& t) {
    if (!(t.xbar > 0.0) || !std::isfinite(t.xbar)) {
        throw InfeasibleMomentsError("Lindley1: sample mean must be positive");
    }
    const auto defect = [&](double c) { return mean(DistributionSpec::lindley1(c)) - t.xbar; };
    const auto root = detail::brent_root(defect, 1e-6, 1e6);
    if (!root) throw NoSolutionError("Lindley1: mean is outside the attainable range");
    if (!root->converged) throw ConvergenceError("Lindley1: root finding did not converge");
    const DistributionSpec spec = DistributionSpec::lindley1(root->x);
    return {spec, {defect(root->x)}, root->iterations, true, {}};
}

SolveReport estimate_tpld(const MomentTargets& t) {
    require_positive_targets(t, false);
    const double xb = t.xbar;
    const double s2 = t.s2;
    const double radicand = -2.0 * s2 + 2.0 * xb * xb;
    if (!(radicand > 0.0)) {
        throw InfeasibleMomentsError("TPLD: requires s^2 < xbar^2");
    }
    const double root = std::sqrt(radicand);
    const double b = -(s2 + xb * xb) * (xb * root - 2.0 * s2) /
                     ((xb * root + xb * xb - s2) * (2.0 * xb + root));
    const double c = (2.0 * xb + root) / (s2 + xb * xb);
    if (!(c > 0.0) || !(b * c > -1.0)) {
        throw ParameterError("TPLD: estimated parameters violate c > 0, b*c > -1");
    }
    const DistributionSpec spec = DistributionSpec::tpld(b, c);
    return {spec, {mean(spec) - xb, variance(spec) - s2}, 0, true, {}};
}

SolveReport estimate_two_param(Family family, const MomentTargets& t, const NewtonOptions& opts) {
    if (family != Family::PLD && family != Family::NWL) {
        throw FamilyError("estimate_two_param supports PLD and NWL only");
    }
    require_positive_targets(t, false);
    return multistart<2>(family, t, opts);
}

SolveReport estimate_three_param(Family family, const MomentTargets& t, const NewtonOptions& opts) {
    if (family != Family::GLD && family != Family::NGLD) {
        throw FamilyError("estimate_three_param supports GLD and NGLD only");
    }
    require_positive_targets(t, true);
    return multistart<3>(family, t, opts);
}

SolveReport estimate_dtl(const MomentTargets& t) {
    if (!(t.x_min < t.x_max) || !(t.x_min >= 0.0) || !std::isfinite(t.x_max)) {
        throw DataError("DTL: requires 0 <= x_min < x_max < inf");
    }
    if (!(t.xbar >= t.x_min && t.xbar <= t.x_max)) {
        throw DataError("DTL: sample mean must lie within [x_min, x_max]");
    }
    const auto defect = [&](double c) {
        return mean(DistributionSpec::dtl(c, t.x_min, t.x_max)) - t.xbar;
    };
    const auto root = detail::brent_root(defect, 1e-6, 1e3);
    if (!root) throw NoSolutionError("DTL: mean is outside the attainable range for c in [1e-6, 1e3]");
    if (!root->converged) throw ConvergenceError("DTL: root finding did not converge");
    const DistributionSpec spec = DistributionSpec::dtl(root->x, t.x_min, t.x_max);
    return {spec, {defect(root->x)}, root->iterations, true, {}};
}

SolveReport estimate_lognormal(const MomentTargets& t) {
    require_positive_targets(t, false);
    const double sigma2 = std::log1p(t.s2 / (t.xbar * t.xbar));
    const DistributionSpec spec =
        DistributionSpec::lognormal(t.xbar * std::exp(-0.5 * sigma2), std::sqrt(sigma2));
    return {spec, {mean(spec) - t.xbar, variance(spec) - t.s2}, 0, true, {}};
}

SolveReport estimate(Family family, const MomentTargets& t) {
    switch (family) {
        case Family::Lindley1: return estimate_lindley1(t);
        case Family::TPLD: return estimate_tpld(t);
        case Family::PLD:
        case Family::NWL: return estimate_two_param(family, t);
        case Family::GLD:
        case Family::NGLD: return estimate_three_param(family, t);
        case Family::DTL: return estimate_dtl(t);
        case Family::Lognormal: return estimate_lognormal(t);
    }
    throw FamilyError("unknown family");
}

}  // namespace lindley
