#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "polynomial.hpp"

namespace sqt {

/// m x n grid of equal cells on the unit square: n columns of width 1/n,
/// m rows of height 1/m; aspect ratio max(m,n)/min(m,n).
Dissection grid_tiling(unsigned m, unsigned n);

struct TwoBlockTiling {
    QuadExt ratio;  // the chosen root of np R^2 - mp R + mq = 0
    Dissection dissection;
};

/// Two-block construction: a left block of m rows x n columns of rectangles
/// lying "along" (width R/m, height 1/m) next to a right block of p rows x
/// q columns lying "across", together filling the unit square. Forces
/// np R^2 - mp R + mq = 0; `plus_root` selects the root. DomainError when
/// the discriminant m^2 p^2 - 4mnpq is negative.
TwoBlockTiling two_block_tiling(const Int& m, const Int& n, const Int& p, const Int& q,
                                bool plus_root);

/// Tiling of the unit square by rectangles of ratio x, for any quadratic
/// irrational x with both x and conjugate(x) positive (DomainError naming
/// the nonpositive value otherwise — the impossibility obstruction).
/// Emits exactly m*n + p*q parts for the two-block parameters derived from
/// the minimal polynomial ax^2+bx+c: g = gcd(a,-b), m = -b/g, n = a/g,
/// p = m*g, q = c.
Dissection quadratic_tiling(const QuadExt& x);

/// Positive rationals c_1..c_n with c_1 R + 1/(c_2 R + 1/(... + 1/(c_n R))) = 1.
struct CFExpansion {
    std::vector<Rat> c;
};

/// Evaluates the continued-fraction tower at R.
QuadExt cf_tower_value(const CFExpansion& e, const QuadExt& ratio);

/// Alternating-cut construction: step i slices off a rectangle of aspect
/// c_i*R (vertical cut on odd steps, horizontal on even), and each slice
/// with c_i = u/v in lowest terms is subdivided into a grid of u*v cells of
/// ratio exactly R. Requires the tower to evaluate to exactly 1 at R > 0.
Dissection cf_tiling(const QuadExt& ratio, const CFExpansion& e);

/// Length-1 expansion [v/u] for rational x = u/v > 0; length-2 expansion
/// [n/m, p/q] from the two-block parameters for admissible quadratic x.
CFExpansion find_cf(const QuadExt& x);

/// Outcome of the decision procedure.
struct Decision {
    enum class Verdict { possible, impossible, undecided };
    Verdict verdict;
    std::optional<Dissection> dissection;  // present iff possible
    std::optional<QuadExt> witness_value;  // nonpositive root/conjugate, when expressible
    std::string witness_text;              // description when no field value exists
    bool stability = false;                // Routh-Hurwitz result (polynomial queries)
};

/// Can a square be tiled by rectangles similar to 1 x x? x and 1/x are the
/// same query. Rational x > 0: grid tiling. Quadratic x with x and
/// conjugate(x) positive: two-block tiling. Otherwise impossible, with the
/// nonpositive value as witness. DomainError for x = 0.
Decision decide(const QuadExt& x);

/// Decision for a ratio given by its (claimed minimal) integer polynomial.
/// The exact stability test decides impossibility; a constructive verdict is
/// emitted for degrees 1 and 2 (the designated root is the larger real
/// root); stable polynomials of degree >= 3 report `undecided`.
/// DomainError for the zero/constant polynomial and for stable quadratics
/// with no real root.
Decision decide(const IntPoly& p);

/// Stable one-line report: "POSSIBLE <nparts>", "IMPOSSIBLE witness=<number>"
/// or "UNDECIDED stability=<bool>".
std::string decision_report(const Decision& d);

}  // namespace sqt
