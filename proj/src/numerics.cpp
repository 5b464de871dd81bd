#include "qre/numerics.hpp"

#include <cmath>
#include <string>

namespace qre {

namespace {

double residual(double w, double x) { return std::fabs(w * std::exp(w) - x); }

bool converged(double w, double x) {
    return residual(w, x) <= 1e-12 * std::fmax(1.0, std::fabs(x));
}

// initial guesses: branch-point expansion near -1/e, series / log-asymptotic
// elsewhere (de Bruijn form for W-1 near 0-)
double seed(double x, WBranch branch) {
    const double q = 2.0 * (std::exp(1.0) * x + 1.0);  // 0 at the branch point
    if (branch == WBranch::Principal) {
        if (x < -0.3) {
            const double p = std::sqrt(q);
            return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
        }
        if (x < 1.0) return x * (1.0 + x * (-1.0 + x * 1.5));
        const double l1 = std::log(x);
        if (x < 6.0) return 0.5 + 0.5 * l1;
        const double l2 = std::log(l1);
        return l1 - l2 + l2 / l1;
    }
    if (x < -0.27) {
        const double p = -std::sqrt(q);
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    }
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    return l1 - l2 + l2 / l1;
}

// last-resort solve: w*exp(w) is monotone on each branch, so a sign-safe
// bisection always lands
double bisect_branch(double x, WBranch branch) {
    double lo, hi;
    if (branch == WBranch::Principal) {
        lo = -1.0;
        hi = 1.0;
        while (hi * std::exp(hi) < x) hi *= 2.0;  // g increasing on [-1, inf)
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (mid * std::exp(mid) < x ? lo : hi) = mid;
        }
    } else {
        hi = -1.0;
        lo = -2.0;
        while (lo * std::exp(lo) < x) lo *= 2.0;  // g decreasing on (-inf, -1]
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (mid * std::exp(mid) < x ? hi : lo) = mid;
        }
    }
    const double a = lo, b = hi;
    return residual(a, x) <= residual(b, x) ? a : b;
}

}  // namespace

double lambert_w(double x, WBranch branch) {
    if (x < neg_inv_e) {
        if (x >= neg_inv_e - 1e-15) {
            x = neg_inv_e;  // feasibility-boundary round-off
        } else {
            throw DomainError("lambert_w: x = " + std::to_string(x) +
                              " below -1/e, no real solution");
        }
    }
    if (branch == WBranch::Secondary && x >= 0.0)
        throw DomainError("lambert_w: secondary branch requires x in [-1/e, 0)");
    if (x == neg_inv_e) return -1.0;
    if (x == 0.0) return 0.0;  // principal only; secondary excluded x >= 0

    double w = seed(x, branch);

    // Halley iteration on f(w) = w*exp(w) - x, cubic convergence.  the
    // residual test alone is weak where (1+w)e^w is tiny (secondary tail), so
    // also demand a small last step before accepting -- costs one iteration.
    for (int i = 0; i < 100; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        if (denom == 0.0 || !std::isfinite(denom)) break;
        double next = w - f / denom;
        // keep iterates on the branch
        if (branch == WBranch::Principal && next < -1.0) next = -1.0 + 1e-14;
        if (branch == WBranch::Secondary && next > -1.0) next = -1.0 - 1e-14;
        if (!std::isfinite(next)) break;
        const double step = std::fabs(next - w);
        w = next;
        if (converged(w, x) && step <= 1e-12 * std::fmax(1.0, std::fabs(w)))
            return w;
    }

    w = bisect_branch(x, branch);
    if (!converged(w, x))
        throw DomainError("lambert_w: failed to converge at x = " +
                          std::to_string(x));
    return w;
}

double bisect_threshold(const std::function<bool(double)>& pred, double lo,
                        double hi, double tol) {
    if (!(tol > 0.0)) throw ValidationError("bisect_threshold: tol must be > 0");
    if (!(lo < hi))
        throw BracketError("bisect_threshold: need lo < hi, got [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (pred(lo))
        throw BracketError("bisect_threshold: predicate already true at lo = " +
                           std::to_string(lo));
    if (!pred(hi))
        throw BracketError("bisect_threshold: predicate still false at hi = " +
                           std::to_string(hi));
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // double resolution exhausted
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;  // feasible endpoint of the final bracket
}

}  // namespace qre
