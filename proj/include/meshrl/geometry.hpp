#pragma once

#include <cmath>

namespace meshrl {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 midpoint(Vec2 a, Vec2 b) { return 0.5 * (a + b); }

// Twice the signed area of triangle abc; positive when counter-clockwise.
inline double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

// Counter-clockwise angle in degrees, in [0, 360), from direction `from` to direction `to`.
inline double ccw_angle_deg(Vec2 from, Vec2 to)
{
    double a = std::atan2(cross(from, to), dot(from, to)) * 180.0 / M_PI;
    if (a < 0.0) a += 360.0;
    return a;
}

} // namespace meshrl
