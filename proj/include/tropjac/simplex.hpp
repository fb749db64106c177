#pragma once

#include "tropjac/linalg.hpp"

namespace tropjac {

/// Exact rational simplex (Bland's rule): minimize c.x subject to
/// A x = b, x >= 0. Returns nullopt when infeasible; throws on an
/// unbounded objective (our callers always optimize over boxes).
struct LPSolution {
    Rational value;
    VecQ x;
};

std::optional<LPSolution> lp_minimize(const MatQ& a, const VecQ& b, const VecQ& c);

}  // namespace tropjac
