#pragma once

// Bracketed scalar root finding (Brent's method). Internal to the library.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

namespace lindley::detail {

struct BracketedRoot {
    double x = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Root of f in [a, b]; std::nullopt when f(a) and f(b) share a sign.
template <typename F>
std::optional<BracketedRoot> brent_root(F&& f, double a, double b, int max_iter = 200) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return BracketedRoot{a, 0, true};
    if (fb == 0.0) return BracketedRoot{b, 0, true};
    if (!(fa * fb < 0.0)) return std::nullopt;

    double c = b, fc = fb, d = b - a, e = d;
    for (int iter = 1; iter <= max_iter; ++iter) {
        if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * eps * std::abs(b) + 1e-300;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return BracketedRoot{b, iter, true};

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            // Inverse quadratic interpolation, or secant when only two points.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    return BracketedRoot{b, max_iter, false};
}

}  // namespace lindley::detail
