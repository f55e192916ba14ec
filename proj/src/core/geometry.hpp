#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "numbers.hpp"

namespace sqt {

/// Axis-aligned rectangle: lower-left corner (x, y), side lengths w, h.
/// All coordinates live in one quadratic field (rationals embed freely).
struct Rect {
    QuadExt x, y, w, h;

    QuadExt right() const { return x + w; }
    QuadExt top() const { return y + h; }
    QuadExt area() const { return w * h; }
};

/// A target rectangle together with the parts that are claimed to tile it.
struct Dissection {
    Rect target;
    std::vector<Rect> parts;
};

/// Names the first violated tiling condition.
struct Violation {
    enum class Kind {
        nonpositive_side,   // some rectangle has w <= 0 or h <= 0
        part_outside,       // part not contained in the target
        overlap,            // two parts with intersecting interiors
        area_mismatch,      // sum of part areas != target area
    };
    Kind kind;
    int part_a = -1;  // offending part index (-1: the target)
    int part_b = -1;  // second part for overlaps
    std::string message;
};

/// Checks the three tiling invariants: containment, pairwise interior
/// disjointness, and exact area sum (together equivalent to an exact tiling
/// of the target by the parts). Returns nullopt when the dissection is valid.
std::optional<Violation> validate(const Dissection& d);

enum class Orientation { wide, tall, square };

/// The common aspect ratio (longer side : shorter side, >= 1) and the
/// orientation of every part.
struct AspectReport {
    QuadExt ratio;
    std::vector<Orientation> orientation;
};

/// The first pair of parts whose aspect ratios differ.
struct SimilarityMismatch {
    int part_a;
    int part_b;
};

/// Requires validate(d) == nullopt.
std::variant<AspectReport, SimilarityMismatch> similarity(const Dissection& d);

/// Swap x<->y and w<->h everywhere.
Dissection transpose(const Dissection& d);

/// Scale all x coordinates and widths by fx, all y and heights by fy
/// (both must be positive).
Dissection scale(const Dissection& d, const QuadExt& fx, const QuadExt& fy);

/// Parses the line-oriented dissection file format:
///   target <x> <y> <w> <h>
///   part <x> <y> <w> <h>     (one line per part)
/// '#' starts a comment, blank lines are ignored, coordinates follow the
/// exactnum grammar. All coordinates must share a single radicand.
/// ParseError carries the offending line number.
Dissection read_dissection(std::string_view text);

/// Canonical text form; read_dissection(write_dissection(d)) == d.
std::string write_dissection(const Dissection& d);

/// Plain SVG 1.1, one <rect> per part, white fill, 1px stroke; the target
/// maps to a px * (px*H/W) viewport. Numbers are printed with 12 significant
/// digits; output is deterministic. Requires validate(d) == nullopt.
std::string to_svg(const Dissection& d, int px);

}  // namespace sqt
