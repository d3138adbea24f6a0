#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace packlab {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// All structured failures carry a short machine-readable code ("invalid-descriptor",
// "no-separator", ...) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    Point operator/(double s) const { return {x / s, y / s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

using Vec = Point;

inline double dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }
inline double dist2(const Point& a, const Point& b) { return (a - b).norm2(); }
inline Vec perp(const Vec& v) { return {-v.y, v.x}; }
inline Vec normalized(const Vec& v) {
    double n = v.norm();
    return n > 0.0 ? v / n : Vec{0.0, 0.0};
}
inline Point rotate(const Point& p, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Axis-aligned rectangle, [x0,x1] x [y0,y1].
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    Rect() = default;
    Rect(double ax0, double ay0, double ax1, double ay1) : x0(ax0), y0(ay0), x1(ax1), y1(ay1) {}

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    double diam() const { return std::hypot(width(), height()); }
    Point center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
    bool contains(const Point& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    bool contains_strict(const Point& p) const { return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1; }
    bool contains(const Rect& r) const { return r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1; }
    bool overlaps(const Rect& r) const { return r.x0 < x1 && r.x1 > x0 && r.y0 < y1 && r.y1 > y0; }
    Rect expanded(double m) const { return {x0 - m, y0 - m, x1 + m, y1 + m}; }

    static Rect of_points(const std::vector<Point>& pts) {
        Rect r{pts.front().x, pts.front().y, pts.front().x, pts.front().y};
        for (const Point& p : pts) {
            r.x0 = std::min(r.x0, p.x);
            r.y0 = std::min(r.y0, p.y);
            r.x1 = std::max(r.x1, p.x);
            r.y1 = std::max(r.y1, p.y);
        }
        return r;
    }
};

// Distance from p to closed segment [a,b].
inline double point_segment_dist(const Point& p, const Point& a, const Point& b) {
    Vec ab = b - a;
    double len2 = ab.norm2();
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + ab * t);
}

inline Point project_on_segment(const Point& p, const Point& a, const Point& b) {
    Vec ab = b - a;
    double len2 = ab.norm2();
    if (len2 == 0.0) return a;
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return a + ab * t;
}

double segment_segment_dist(const Point& a0, const Point& a1, const Point& b0, const Point& b1);
bool segments_intersect(const Point& a0, const Point& a1, const Point& b0, const Point& b1);

// Distance from a point to a rectangle (0 when inside).
inline double point_rect_dist(const Point& p, const Rect& r) {
    double dx = std::max({r.x0 - p.x, 0.0, p.x - r.x1});
    double dy = std::max({r.y0 - p.y, 0.0, p.y - r.y1});
    return std::hypot(dx, dy);
}

// Max distance between two points of a convex polyline (rotating calipers).
double convex_diameter(const std::vector<Point>& pts);

// Signed area (positive when counterclockwise).
double polygon_area(const std::vector<Point>& pts);

// Strict point-in-convex-polygon test; boundary counts as outside.
bool point_in_convex_polygon(const Point& p, const std::vector<Point>& poly, double tol = 0.0);

// Clip a convex polygon by the half-plane dot(x - anchor, normal) <= 0.
std::vector<Point> clip_convex_by_halfplane(const std::vector<Point>& poly, const Point& anchor, const Vec& normal);

}  // namespace packlab
