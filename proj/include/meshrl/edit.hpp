#pragma once

#include "meshrl/mesh.hpp"

namespace meshrl {

enum class EditError {
    None,
    InactiveHalfEdge,
    BoundaryEdge,
    DuplicateEdge,
    LinkConditionViolated,
    WouldPinchBoundary,
    GeometricVertexLoss,
    DegenerateHexagon,
    DegreeTooLow,
    DegenerateNeighbor,
    ChordLoop,
    ChordOverrun,
    StalePath,
};

const char* to_string(EditError e);

// Result of an edit. On error the mesh is left untouched.
struct EditOutcome {
    EditError error = EditError::None;
    int touched = 0; // records written by the edit
    int new_vertex = kNone;

    bool ok() const { return error == EditError::None; }
    explicit operator bool() const { return ok(); }
};

} // namespace meshrl
