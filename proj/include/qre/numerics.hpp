#pragma once

#include <functional>

#include "qre/errors.hpp"

namespace qre {

// real branches of the Lambert W function: W0 on [-1/e, inf),
// W-1 on [-1/e, 0)
enum class WBranch { Principal, Secondary };

// -1/e rounded to nearest double; shared by every domain check so the
// boundary is a single point across the library
inline constexpr double neg_inv_e = -0.36787944117144232159552377016146;

// solves w*exp(w) = x on the requested branch.
// residual contract: |w*exp(w) - x| <= 1e-12 * max(1, |x|).
// arguments within 1e-15 below -1/e are snapped to -1/e (feasibility-boundary
// round-off shows up exactly there); anything further below throws DomainError.
double lambert_w(double x, WBranch branch);

// smallest x in [lo, hi] where a monotone false->true predicate flips,
// located to within tol.  returns the feasible (true) endpoint of the final
// bracket.  throws BracketError unless pred(lo) is false and pred(hi) true.
double bisect_threshold(const std::function<bool(double)>& pred, double lo,
                        double hi, double tol);

}  // namespace qre
