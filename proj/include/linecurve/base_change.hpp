#pragma once

#include "linecurve/mat3.hpp"

namespace linecurve {

// Base change carrying a pair of pgl-commuting matrices into the affine
// pattern (vanishing (3,1) and (3,2) entries), by conjugating a common
// invariant plane onto span(e1, e2). Case split on the eigenstructure:
// complex pair -> real span of the complex eigenspaces; distinct real
// eigenvalues -> span of two eigenvectors; repeated eigenvalue -> its
// eigenspace when 2-dimensional, otherwise ker((A - lambda I)^2); two
// scalar matrices -> any plane (identity returned).
//
// Precondition: the trace-adjusted commutator norm is <= 1e-8 * scale
// where scale = max|a| * max|b|; violations throw std::invalid_argument
// carrying the measured norm.
Mat3 commuting_to_aff(const Mat3& a, const Mat3& b);

// Max |(3,1)| , |(3,2)| entry of p^-1 * m * p: the affine-pattern residual
// commuting_to_aff drives to ~0.
double aff_pattern_residual(const Mat3& m, const Mat3& p);

} // namespace linecurve
