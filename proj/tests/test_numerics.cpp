#include <cmath>
#include <vector>

#include "doctest.h"
#include "qre/errors.hpp"
#include "qre/numerics.hpp"

using namespace qre;

namespace {

// independent reference: solve w*e^w = x by plain bisection on a bracket known
// to contain exactly one root of the requested branch
double w_by_bisection(double x, double lo, double hi) {
    auto g = [x](double w) { return w * std::exp(w) - x; };
    double glo = g(lo);
    REQUIRE(glo * g(hi) <= 0.0);
    for (int i = 0; i < 500; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) == 0.0) return mid;
        if ((g(mid) < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = g(mid);
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double residual_ratio(double w, double x) {
    return std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x));
}

}  // namespace

TEST_CASE("lambert w principal: fixed points and references") {
    CHECK(lambert_w(0.0, WBranch::Principal) == 0.0);
    CHECK(lambert_w(std::exp(1.0), WBranch::Principal)
          == doctest::Approx(1.0).epsilon(1e-14));
    // W0(1) = omega constant, cross-checked against an independent bisection
    const double omega = w_by_bisection(1.0, 0.0, 1.0);
    CHECK(omega == doctest::Approx(0.567143290409784).epsilon(1e-12));
    CHECK(lambert_w(1.0, WBranch::Principal)
          == doctest::Approx(omega).epsilon(1e-13));
    // large argument: w + ln w = ln x
    const double w = lambert_w(1e6, WBranch::Principal);
    CHECK(w + std::log(w) == doctest::Approx(std::log(1e6)).epsilon(1e-13));
}

TEST_CASE("lambert w secondary: references") {
    const double ref = w_by_bisection(-0.1, -10.0, -1.0);
    CHECK(ref == doctest::Approx(-3.577152063957297).epsilon(1e-12));
    CHECK(lambert_w(-0.1, WBranch::Secondary)
          == doctest::Approx(ref).epsilon(1e-13));
    // deep tail: x -> 0- pushes W-1 to -inf like ln(-x)
    const double wt = lambert_w(-1e-10, WBranch::Secondary);
    CHECK(wt < -20.0);
    CHECK(residual_ratio(wt, -1e-10) < 1e-12);
}

TEST_CASE("lambert w: branch point is exact on both branches") {
    CHECK(lambert_w(neg_inv_e, WBranch::Principal) == -1.0);
    CHECK(lambert_w(neg_inv_e, WBranch::Secondary) == -1.0);
    // just-below arguments inside the snap window resolve instead of throwing
    const double nudged = neg_inv_e - 1e-16;
    CHECK(lambert_w(nudged, WBranch::Principal)
          == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(lambert_w(nudged, WBranch::Secondary)
          == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("lambert w: domain errors") {
    CHECK_THROWS_AS(lambert_w(neg_inv_e - 1e-9, WBranch::Principal),
                    DomainError);
    CHECK_THROWS_AS(lambert_w(neg_inv_e - 1e-9, WBranch::Secondary),
                    DomainError);
    CHECK_THROWS_AS(lambert_w(0.0, WBranch::Secondary), DomainError);
    CHECK_THROWS_AS(lambert_w(0.5, WBranch::Secondary), DomainError);
    CHECK_THROWS_AS(lambert_w(std::nan(""), WBranch::Principal), DomainError);
}

TEST_CASE("lambert w: branch ordering on the shared domain") {
    for (double x : {-0.3, -0.2, -0.1, -0.01, -1e-4, -1e-8}) {
        const double w0 = lambert_w(x, WBranch::Principal);
        const double wm = lambert_w(x, WBranch::Secondary);
        CAPTURE(x);
        CHECK(wm < -1.0);
        CHECK(w0 > -1.0);
        CHECK(w0 < 0.0);
        CHECK(wm < w0);
    }
}

TEST_CASE("lambert w: round trip w -> x -> w on both branches") {
    // principal covers [-1, inf); stay 1e-3 away from the branch point where
    // the inverse problem itself is ill-conditioned (dx/dw -> 0)
    for (int i = 0; i <= 400; ++i) {
        const double w = -0.999 + (20.0 + 0.999) * i / 400.0;
        const double x = w * std::exp(w);
        const double back = lambert_w(x, WBranch::Principal);
        CAPTURE(w);
        CHECK(std::abs(back - w) <= 1e-10 * std::max(1.0, std::abs(w)));
    }
    // secondary covers (-inf, -1]
    for (int i = 0; i <= 400; ++i) {
        const double w = -1.001 - (19.0 * i) / 400.0;
        const double x = w * std::exp(w);
        const double back = lambert_w(x, WBranch::Secondary);
        CAPTURE(w);
        CHECK(std::abs(back - w) <= 1e-10 * std::abs(w));
    }
}

TEST_CASE("lambert w: residual contract on a dense grid") {
    // principal: linear sweep through the negative pocket plus log sweep out
    // to 1e6
    for (int i = 0; i <= 2000; ++i) {
        const double x = neg_inv_e + (2.0 - neg_inv_e) * i / 2000.0;
        CAPTURE(x);
        CHECK(residual_ratio(lambert_w(x, WBranch::Principal), x) <= 1e-12);
    }
    for (int i = 0; i <= 1000; ++i) {
        const double x = 2.0 * std::pow(5e5, i / 1000.0);
        CAPTURE(x);
        CHECK(residual_ratio(lambert_w(x, WBranch::Principal), x) <= 1e-12);
    }
    // secondary: log sweep across (-1/e, -1e-12]
    for (int i = 0; i <= 2000; ++i) {
        const double x = -std::exp(std::log(1e-12)
                                   + (std::log(1.0 / std::exp(1.0))
                                      - std::log(1e-12))
                                         * i / 2000.0);
        CAPTURE(x);
        CHECK(residual_ratio(lambert_w(x, WBranch::Secondary), x) <= 1e-12);
    }
}

TEST_CASE("bisect_threshold: step predicate") {
    const double r =
        bisect_threshold([](double x) { return x >= 2.0; }, 0.0, 10.0, 1e-6);
    CHECK(std::abs(r - 2.0) <= 1e-6);
    // returned endpoint satisfies the predicate
    CHECK(r >= 2.0);
}

TEST_CASE("bisect_threshold: sqrt(2) to tight tolerance") {
    const double r = bisect_threshold([](double x) { return x * x >= 2.0; },
                                      0.0, 2.0, 1e-9);
    CHECK(std::abs(r - std::sqrt(2.0)) <= 1e-9);
    CHECK(r * r >= 2.0);
}

TEST_CASE("bisect_threshold: bracket errors") {
    auto always = [](double) { return true; };
    auto never = [](double) { return false; };
    CHECK_THROWS_AS(bisect_threshold(always, 0.0, 1.0, 1e-6), BracketError);
    CHECK_THROWS_AS(bisect_threshold(never, 0.0, 1.0, 1e-6), BracketError);
    CHECK_THROWS_AS(bisect_threshold([](double x) { return x >= 0.5; }, 1.0,
                                     0.0, 1e-6),
                    BracketError);
    CHECK_THROWS_AS(bisect_threshold([](double x) { return x >= 0.5; }, 1.0,
                                     1.0, 1e-6),
                    BracketError);
}

TEST_CASE("bisect_threshold: bad tolerance") {
    CHECK_THROWS_AS(bisect_threshold([](double x) { return x >= 0.5; }, 0.0,
                                     1.0, 0.0),
                    ValidationError);
    CHECK_THROWS_AS(bisect_threshold([](double x) { return x >= 0.5; }, 0.0,
                                     1.0, -1e-3),
                    ValidationError);
}
