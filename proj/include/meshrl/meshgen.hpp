#pragma once

// Initial meshes for self-play: random star-shaped polygons, refined Delaunay
// triangulations, and their Catmull-Clark quadrangulations.

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshrl/mesh.hpp"

namespace meshrl {

enum class MeshgenErrorKind { BadDegree, DegeneratePolygon, InvalidInput };

class MeshgenError : public std::runtime_error {
public:
    MeshgenError(MeshgenErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }
    MeshgenErrorKind kind() const noexcept { return kind_; }

private:
    MeshgenErrorKind kind_;
};

using Rng = std::mt19937_64;

struct Polygon {
    std::vector<Vec2> vertices; // counter-clockwise

    int degree() const { return static_cast<int>(vertices.size()); }
};

double signed_area(const Polygon& poly);

// True when no two non-adjacent edges intersect and no vertex repeats.
bool is_simple(const Polygon& poly);

// Star-shaped polygon: n sorted uniform angles, radii uniform in [0.5, 1].
// Draws again until the polygon is simple with no edge shorter than 1e-3.
Polygon random_polygon(int n, Rng& rng);

inline Polygon regular_polygon(int n, double radius = 1.0)
{
    Polygon p;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * i / n;
        p.vertices.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    return p;
}

// Bounding-box diagonal over six.
double default_target_edge_length(const Polygon& poly);

// Ear clipping, then longest-edge midpoint refinement until every edge is at
// most 1.5 * target, with Delaunay flips after every split. Polygon corners
// are geometric vertices. Desired degrees are not assigned.
Mesh triangulate_refined(const Polygon& poly, double target_edge_length);

// Each triangle (a, b, c) becomes (a, m_ab, g, m_ca), (b, m_bc, g, m_ab),
// (c, m_ca, g, m_bc). New ids: original vertices, then one midpoint per edge
// in first-seen order, then one centroid per triangle.
Mesh catmull_clark_quadrangulate(const Mesh& tri);

// Jacobi averaging of interior positions; boundary vertices stay put.
Mesh smooth_for_display(const Mesh& mesh, int iterations);

} // namespace meshrl
