#pragma once

// Local edits on triangle meshes, each parametrized by a half-edge.

#include "meshrl/edit.hpp"
#include "meshrl/mesh.hpp"

namespace meshrl::tri {

// check_* report whether the edit would succeed without touching the mesh.
EditError check_flip_edge(const Mesh& mesh, int h);
EditError check_split_edge(const Mesh& mesh, int h);
EditError check_collapse_edge(const Mesh& mesh, int h);

// Replaces the edge of h by the other diagonal of its two triangles.
EditOutcome flip_edge(Mesh& mesh, int h);

// Inserts the edge midpoint and connects it to the opposite vertices.
EditOutcome split_edge(Mesh& mesh, int h);

// Merges the endpoints of an interior edge; the two incident triangles vanish.
// A boundary endpoint survives, otherwise the lower vertex id does.
EditOutcome collapse_edge(Mesh& mesh, int h);

} // namespace meshrl::tri
