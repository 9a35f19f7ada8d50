#pragma once

// Per-half-edge action tables: three edits on triangle meshes, five on quads.

#include "meshrl/edit.hpp"
#include "meshrl/mesh.hpp"

namespace meshrl {

enum class TriAction { Flip, Split, Collapse };
enum class QuadAction { FlipLeft, FlipRight, VertexSplit, ElementCollapse, GlobalSplit };

inline int actions_per_halfedge(int arity) { return arity == 3 ? 3 : 5; }

const char* action_name(int arity, int action);

// Dispatch on mesh.arity(); action indexes TriAction or QuadAction.
EditError check_action(const Mesh& mesh, int h, int action);
EditOutcome apply_action(Mesh& mesh, int h, int action);

} // namespace meshrl
