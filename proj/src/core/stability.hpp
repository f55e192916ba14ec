#pragma once

#include "polynomial.hpp"

namespace sqt {

/// Canonical integer minimal polynomial of a quadratic-field element: for a
/// rational p/q the degree-1 polynomial qx - p; otherwise the degree-2
/// polynomial with roots x and conjugate(x), i.e. x^2 - 2a x + (a^2 - b^2 d)
/// with denominators cleared (content 1, positive leading coefficient).
IntPoly minimal_polynomial(const QuadExt& x);

/// True iff every complex root of p has strictly positive real part,
/// decided exactly: q(x) = p(-x) must be Hurwitz-stable, i.e. all of q's
/// coefficients nonzero and of equal sign and the Routh array (computed
/// with exact rationals) has a first column of constant sign. A zero
/// anywhere in the first column means a root on the imaginary axis or an
/// unstable pair, and yields false.
/// Requires p nonzero of degree >= 1.
bool all_roots_positive_real_part(const IntPoly& p);

}  // namespace sqt
