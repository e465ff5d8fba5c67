#include "compaug/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace compaug {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
    bool negative = s[0] == '-';
    std::string digits = s.substr(negative ? 1 : 0);
    dot_pos = digits.find('.');
    std::string whole = digits.substr(0, dot_pos);
    std::string frac = digits.substr(dot_pos + 1);
    if (whole.empty()) whole = "0";
    auto all_digits = [](const std::string& d) {
      return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal scalar: " + s);
    }
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Scalar out(num, den);
    out.canonicalize();
    return negative ? Scalar(-out) : out;
  }
  Scalar out;
  if (out.set_str(s, 10) != 0) throw std::invalid_argument("malformed scalar: " + s);
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

double to_double(const Scalar& s) { return s.get_d(); }

Scalar cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
Scalar dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

Scalar linf_norm(const Point2& v) {
  Scalar ax = abs(v.x), ay = abs(v.y);
  return ax < ay ? ay : ax;
}

Scalar squared_distance(const Point2& a, const Point2& b) {
  Point2 d = b - a;
  return dot(d, d);
}

ApproxPoint approx(const Point2& p) { return {p.x.get_d(), p.y.get_d()}; }

ApproxPoint approx_refined(const Point2& p) {
  ApproxPoint a{p.x.get_d(), p.y.get_d()};
  a.lx = Scalar(p.x - a.x).get_d();
  a.ly = Scalar(p.y - a.y).get_d();
  a.refined = true;
  return a;
}

int orient_filtered(const ApproxPoint& p, const ApproxPoint& q, const ApproxPoint& r) {
  // With M bounding every |coordinate| and L every |residual|, a coordinate
  // is off by at most c M (c = eps, or eps^2 when refined). The computed
  // differences (at most A in size) are then off by
  // E <= eps A + 2 eps L + 2 c M, and the determinant by 4 A E + 2 E^2 plus
  // its own rounding. The bound doubles all of that.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double m = std::max({std::fabs(p.x), std::fabs(p.y), std::fabs(q.x), std::fabs(q.y),
                             std::fabs(r.x), std::fabs(r.y)});
  if (!std::isfinite(m) || m < 1e-100 || m > 1e100) return 0;
  const double l = std::max({std::fabs(p.lx), std::fabs(p.ly), std::fabs(q.lx), std::fabs(q.ly),
                             std::fabs(r.lx), std::fabs(r.ly)});
  const double c = p.refined && q.refined && r.refined ? eps * eps : eps;
  const double ax = (q.x - p.x) + (q.lx - p.lx), ay = (q.y - p.y) + (q.ly - p.ly);
  const double bx = (r.x - p.x) + (r.lx - p.lx), by = (r.y - p.y) + (r.ly - p.ly);
  const double big = std::max({std::fabs(ax), std::fabs(ay), std::fabs(bx), std::fabs(by)});
  const double e = 2 * (eps * big + 2 * eps * l + 2 * c * m);
  const double bound = 2 * (4 * big * e + 2 * e * e + 4 * eps * big * big);
  const double det = ax * by - ay * bx;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return 0;
}

int compare_filtered(const ApproxPoint& a, const ApproxPoint& b, bool use_x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double ah = use_x ? a.x : a.y, al = use_x ? a.lx : a.ly;
  const double bh = use_x ? b.x : b.y, bl = use_x ? b.lx : b.ly;
  if (!std::isfinite(ah) || !std::isfinite(bh)) return 0;
  const double c = a.refined && b.refined ? eps * eps : eps;
  const double diff = (ah - bh) + (al - bl);
  const double bound = 2 * (eps * (std::fabs(diff) + std::fabs(al) + std::fabs(bl)) +
                            c * (std::fabs(ah) + std::fabs(bh))) + 1e-300;
  if (diff > bound) return 1;
  if (diff < -bound) return -1;
  return 0;
}

bool outside_box_filtered(const ApproxPoint& p, const ApproxPoint& a, const ApproxPoint& b) {
  for (bool use_x : {true, false}) {
    const int pa = compare_filtered(p, a, use_x), pb = compare_filtered(p, b, use_x);
    if (pa != 0 && pa == pb) return true;
  }
  return false;
}

int orient(const Point2& p, const Point2& q, const Point2& r) {
  if (int f = orient_filtered(approx(p), approx(q), approx(r))) return f;
  // Axis-parallel triples are common (diamond copies) and cheap to spot.
  if ((p.y == q.y && q.y == r.y) || (p.x == q.x && q.x == r.x)) return 0;
  Scalar lhs = (q.x - p.x) * (r.y - p.y);
  Scalar rhs = (q.y - p.y) * (r.x - p.x);
  const int c = cmp(lhs, rhs);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

std::string_view to_string(Interaction i) {
  switch (i) {
    case Interaction::disjoint: return "disjoint";
    case Interaction::share_endpoint_only: return "share-endpoint-only";
    case Interaction::cross: return "cross";
    case Interaction::overlap: return "overlap";
    case Interaction::endpoint_in_interior: return "endpoint-in-interior";
  }
  return "?";
}

namespace {

// Position of a collinear point along the segment's dominant axis.
const Scalar& axis_coord(const Point2& p, bool use_x) { return use_x ? p.x : p.y; }

bool between_open(const Scalar& v, const Scalar& a, const Scalar& b) {
  return (a < v && v < b) || (b < v && v < a);
}

}  // namespace

bool point_on_closed_segment(const Point2& p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  bool use_x = s.a.x != s.b.x;
  const Scalar& v = axis_coord(p, use_x);
  const Scalar& a = axis_coord(s.a, use_x);
  const Scalar& b = axis_coord(s.b, use_x);
  return (a <= v && v <= b) || (b <= v && v <= a);
}

bool point_in_open_segment(const Point2& p, const Segment& s) {
  if (s.a == s.b) return false;
  if (orient(s.a, s.b, p) != 0) return false;
  bool use_x = s.a.x != s.b.x;
  return between_open(axis_coord(p, use_x), axis_coord(s.a, use_x), axis_coord(s.b, use_x));
}

Interaction segments_properly_interact(const Segment& s, const Segment& t) {
  const int o1 = orient(s.a, s.b, t.a);
  const int o2 = orient(s.a, s.b, t.b);
  const int o3 = orient(t.a, t.b, s.a);
  const int o4 = orient(t.a, t.b, s.b);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    bool use_x = s.a.x != s.b.x;
    const Scalar* s0 = &axis_coord(s.a, use_x);
    const Scalar* s1 = &axis_coord(s.b, use_x);
    const Scalar* t0 = &axis_coord(t.a, use_x);
    const Scalar* t1 = &axis_coord(t.b, use_x);
    if (*s1 < *s0) std::swap(s0, s1);
    if (*t1 < *t0) std::swap(t0, t1);
    const Scalar& lo = *s0 < *t0 ? *t0 : *s0;
    const Scalar& hi = *s1 < *t1 ? *s1 : *t1;
    if (lo < hi) return Interaction::overlap;
    if (lo == hi) return Interaction::share_endpoint_only;
    return Interaction::disjoint;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return Interaction::cross;

  const bool shared = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
  if (shared) return Interaction::share_endpoint_only;

  if ((o1 == 0 && point_in_open_segment(t.a, s)) ||
      (o2 == 0 && point_in_open_segment(t.b, s)) ||
      (o3 == 0 && point_in_open_segment(s.a, t)) ||
      (o4 == 0 && point_in_open_segment(s.b, t))) {
    return Interaction::endpoint_in_interior;
  }
  return Interaction::disjoint;
}

std::optional<Interaction> segments_interact_filtered(const ApproxPoint (&a)[4]) {
  // Bounding boxes provably apart.
  for (bool use_x : {true, false}) {
    const int c02 = compare_filtered(a[0], a[2], use_x), c03 = compare_filtered(a[0], a[3], use_x);
    const int c12 = compare_filtered(a[1], a[2], use_x), c13 = compare_filtered(a[1], a[3], use_x);
    if (c02 != 0 && c02 == c03 && c02 == c12 && c02 == c13) return Interaction::disjoint;
  }
  const int o1 = orient_filtered(a[0], a[1], a[2]);
  const int o2 = orient_filtered(a[0], a[1], a[3]);
  const int o3 = orient_filtered(a[2], a[3], a[0]);
  const int o4 = orient_filtered(a[2], a[3], a[1]);
  // One segment strictly on one side of the other's line: apart.
  if ((o1 && o1 == o2) || (o3 && o3 == o4)) return Interaction::disjoint;
  // Nonzero signs exclude shared endpoints and every touching case.
  if (o1 && o2 && o3 && o4) {
    return o1 * o2 < 0 && o3 * o4 < 0 ? Interaction::cross : Interaction::disjoint;
  }
  return std::nullopt;
}

bool segments_intersect(const Segment& s, const Segment& t) {
  return segments_properly_interact(s, t) != Interaction::disjoint;
}

std::optional<Point2> line_intersection(const Segment& s, const Segment& t) {
  Point2 r = s.b - s.a;
  Point2 q = t.b - t.a;
  Scalar denom = cross(r, q);
  if (denom == 0) return std::nullopt;
  Scalar u = cross(t.a - s.a, q) / denom;
  return s.a + u * r;
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

Containment point_in_polygon(const Point2& p, std::span<const Point2> polygon) {
  const std::size_t n = polygon.size();
  if (n == 0) return Containment::outside;
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % n];
    if (a == p) return Containment::boundary;
    if (point_on_closed_segment(p, {a, b}) && !(a == b)) return Containment::boundary;
    const bool a_above = a.y > p.y;
    const bool b_above = b.y > p.y;
    if (a_above != b_above) {
      // Edge straddles the horizontal line through p; count it when the
      // crossing lies strictly right of p.
      int o = orient(a, b, p);
      if ((b.y > a.y && o > 0) || (b.y < a.y && o < 0)) inside = !inside;
    }
  }
  return inside ? Containment::inside : Containment::outside;
}

Scalar signed_area2(std::span<const Point2> polygon) {
  Scalar sum = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    sum += cross(polygon[i], polygon[(i + 1) % n]);
  }
  return sum;
}

bool segment_meets_convex_interior(const Segment& s, std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  // Clip the segment against each edge's inner open half-plane
  // (Cyrus-Beck with exact parameters). Interior is nonempty iff the clipped
  // parameter interval has positive length or a single interior point.
  Scalar t0 = 0, t1 = 1;
  Point2 d = s.b - s.a;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    Point2 e = b - a;
    // f(t) = cross(e, s.a + t d - a) must be > 0.
    Scalar f0 = cross(e, s.a - a);
    Scalar fd = cross(e, d);
    if (fd == 0) {
      if (f0 <= 0) return false;
      continue;
    }
    Scalar t = -f0 / fd;
    if (fd > 0) {
      if (t > t0) t0 = t;
    } else {
      if (t < t1) t1 = t;
    }
    if (t0 >= t1) {
      // Open constraints: a degenerate interval only qualifies when no
      // constraint is active there, which cannot happen once t0 >= t1 was
      // produced by a strict bound.
      return false;
    }
  }
  return t0 < t1;
}

bool angle_less(const Point2& u, const Point2& v) {
  auto half = [](const Point2& w) {
    // 0 for angles in [0, pi), 1 for [pi, 2pi).
    return (w.y < 0 || (w.y == 0 && w.x < 0)) ? 1 : 0;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

namespace {

Box inflate(double x0, double y0, double x1, double y1) {
  auto pad = [](double v) { return std::abs(v) * 1e-9 + 1e-300; };
  return {x0 - pad(x0), y0 - pad(y0), x1 + pad(x1), y1 + pad(y1)};
}

}  // namespace

Box bounding_box(const Segment& s) {
  double ax = to_double(s.a.x), ay = to_double(s.a.y);
  double bx = to_double(s.b.x), by = to_double(s.b.y);
  return inflate(std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by));
}

Box bounding_box(const Point2& p) {
  double x = to_double(p.x), y = to_double(p.y);
  return inflate(x, y, x, y);
}

}  // namespace compaug
