// Exact rational geometry: scalars, points, segments and the predicates the
// rest of the library is built on. Nothing in here ever rounds.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compaug {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (mpq_class canonicalizes after every arithmetic operation).
using Scalar = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-0.125" into a canonical
/// Scalar. Throws std::invalid_argument on malformed input or q == 0.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

double to_double(const Scalar& s);

inline Scalar abs(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

struct Point2 {
  Scalar x;
  Scalar y;

  Point2() = default;
  Point2(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
  Point2(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  /// Lexicographic (x, then y). This is the symbolic-shear order used
  /// wherever distinct x-coordinates are assumed.
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point2 operator*(const Scalar& s, const Point2& p) {
    return {s * p.x, s * p.y};
  }
};

struct Segment {
  Point2 a;
  Point2 b;
};

/// Sign of the signed area of triangle pqr: +1 counterclockwise, -1
/// clockwise, 0 collinear.
int orient(const Point2& p, const Point2& q, const Point2& r);

/// Double approximation of a point, for filtered predicates. Refined
/// approximations add the rounded residual (lx, ly): about twice the bits,
/// at the price of one exact subtraction per coordinate.
struct ApproxPoint {
  double x = 0, y = 0;
  double lx = 0, ly = 0;
  bool refined = false;
};
ApproxPoint approx(const Point2& p);
ApproxPoint approx_refined(const Point2& p);

/// orient() from approximations when the rounding error provably cannot
/// flip the sign; 0 when undecided (including every exact zero).
int orient_filtered(const ApproxPoint& p, const ApproxPoint& q, const ApproxPoint& r);

/// Sign of a.x - b.x (or of the y difference), 0 when undecided.
int compare_filtered(const ApproxPoint& a, const ApproxPoint& b, bool use_x);

/// True when p provably lies outside the closed bounding box of ab.
bool outside_box_filtered(const ApproxPoint& p, const ApproxPoint& a, const ApproxPoint& b);

Scalar cross(const Point2& u, const Point2& v);
Scalar dot(const Point2& u, const Point2& v);
Scalar linf_norm(const Point2& v);
Scalar squared_distance(const Point2& a, const Point2& b);

enum class Interaction {
  disjoint,
  share_endpoint_only,
  cross,
  overlap,
  endpoint_in_interior,
};

std::string_view to_string(Interaction i);

/// Exact classification of two closed segments. cross, overlap and
/// endpoint_in_interior are the configurations a planar drawing forbids.
Interaction segments_properly_interact(const Segment& s, const Segment& t);
/// The same classification from approximations of s.a, s.b, t.a, t.b when
/// they settle it; empty otherwise.
std::optional<Interaction> segments_interact_filtered(const ApproxPoint (&approx)[4]);

inline bool is_forbidden(Interaction i) {
  return i == Interaction::cross || i == Interaction::overlap ||
         i == Interaction::endpoint_in_interior;
}

/// True iff p lies strictly between s.a and s.b on s.
bool point_in_open_segment(const Point2& p, const Segment& s);
bool point_on_closed_segment(const Point2& p, const Segment& s);

/// True iff the closed segments have at least one common point.
bool segments_intersect(const Segment& s, const Segment& t);

/// Intersection point of two non-parallel supporting lines.
std::optional<Point2> line_intersection(const Segment& s, const Segment& t);

/// Convex hull in counterclockwise order starting from the lexicographically
/// smallest point; collinear boundary points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

enum class Containment { outside, boundary, inside };

/// Even-odd containment for a closed (possibly weakly simple) polygon given
/// as its vertex cycle. Doubled edges cancel, so walks around trees work.
Containment point_in_polygon(const Point2& p, std::span<const Point2> polygon);

/// Twice the signed area of a closed polygon.
Scalar signed_area2(std::span<const Point2> polygon);

/// True iff the closed segment meets the interior of the convex polygon
/// (given counterclockwise, at least three vertices).
bool segment_meets_convex_interior(const Segment& s,
                                   std::span<const Point2> convex_ccw);

/// Angular comparison of direction vectors by polar angle in [0, 2pi),
/// measured counterclockwise from the positive x-axis. Zero vectors are not
/// allowed.
bool angle_less(const Point2& u, const Point2& v);

/// Axis-aligned box in doubles, slightly inflated. Used only to prune
/// candidate pairs before an exact test; never to decide a predicate.
struct Box {
  double xmin, ymin, xmax, ymax;
  bool overlaps(const Box& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
};
Box bounding_box(const Segment& s);
Box bounding_box(const Point2& p);

/// Calls fn(i, j), i < j, for every pair of boxes that overlap. Sort and
/// sweep on xmin; callers run the exact test on each candidate.
template <typename Fn>
void for_each_box_overlap(std::span<const Box> boxes, Fn&& fn);

}  // namespace compaug

#include "compaug/detail/sweep_pairs.hpp"
