#pragma once

// Quad mesh edits: the five learnable operations and the global cleanup.
//
// An interior edge a->b together with its two quads forms a hexagon
// (a, e, f, b, c, d). A LEFT flip rotates the shared edge one step
// counter-clockwise around the hexagon (to e-c), a RIGHT flip one step
// clockwise (to d-f).

#include <vector>

#include "meshrl/edit.hpp"
#include "meshrl/mesh.hpp"

namespace meshrl::quad {

enum class FlipDirection { Left, Right };

EditError check_flip_edge(const Mesh& mesh, int h, FlipDirection dir);
EditOutcome flip_edge(Mesh& mesh, int h, FlipDirection dir);

// Splits the origin vertex v of h along the line formed by h and the edge
// floor(deg/2) steps further around v. The new quad is (v, n_k, v', n_0).
EditError check_vertex_split(const Mesh& mesh, int h);
EditOutcome vertex_split(Mesh& mesh, int h);

// Collapses the quad of h along the diagonal through the origin of h.
EditError check_element_collapse(const Mesh& mesh, int h);
EditOutcome element_collapse(Mesh& mesh, int h);

// Opens the edge of h into a new quad and splits every quad along the dual
// chord through that edge until the chord reaches the boundary.
EditError check_global_split(const Mesh& mesh, int h);
EditOutcome global_split(Mesh& mesh, int h);

struct CleanupPath {
    std::vector<int> edges; // half-edges p0->p1, ..., p_{k-1}->p_k
    std::vector<int> interior_vertices;
    int endpoints[2] = {kNone, kNone};

    friend bool operator==(const CleanupPath&, const CleanupPath&) = default;
};

// All boundary-to-boundary lines whose end vertices are non-geometric boundary
// vertices of degree 3 and whose inner vertices are non-geometric interior
// vertices of degree 4, in global half-edge order.
std::vector<CleanupPath> find_cleanup_paths(const Mesh& mesh);

// Deletes the path vertices by merging the quad pairs across the path. The
// path is located by its vertex sequence; StalePath if it no longer qualifies.
EditOutcome apply_cleanup(Mesh& mesh, const CleanupPath& path);

// Applies cleanups until none remains. Returns the number applied.
int cleanup_exhaustively(Mesh& mesh);

} // namespace meshrl::quad
