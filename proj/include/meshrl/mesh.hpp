#pragma once

// Half-edge (DCEL) kernel for planar manifold triangle and quad meshes.
//
// Every element is stored as a cycle of `arity` half-edges. Each half-edge is
// associated with one vertex: the opposite vertex for triangles, the origin
// vertex for quads. Boundary half-edges have twin == kNone. Edits flag records
// inactive; compact() removes them and restores the layout where the half-edges
// of element e occupy [e * arity, (e + 1) * arity) starting at the anchor.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshrl/geometry.hpp"

namespace meshrl {

inline constexpr int kNone = -1;

enum class MeshErrorKind {
    NonManifoldInput,
    InconsistentOrientation,
    BadIndex,
    InactiveHalfEdge,
    InactiveVertex,
    DegenerateBoundary,
    MissingDesiredDegree,
    NotCompacted,
};

const char* to_string(MeshErrorKind kind);

class MeshError : public std::runtime_error {
public:
    MeshError(MeshErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    MeshErrorKind kind() const noexcept { return kind_; }

private:
    MeshErrorKind kind_;
};

struct VertexRecord {
    Vec2 position;
    int degree = 0;
    int desired_degree = 0; // 0 until assigned
    bool on_boundary = false;
    bool is_geometric = false;
    bool active = true;
    int halfedge = kNone; // any outgoing half-edge
};

struct HalfEdgeRecord {
    int next = kNone;
    int twin = kNone;
    int vertex = kNone;
    int element = kNone;
    bool active = true;
};

struct ElementRecord {
    int anchor = kNone;
    bool active = true;
};

class Mesh {
public:
    Mesh() = default;
    explicit Mesh(int arity) : arity_(arity) {}

    int arity() const noexcept { return arity_; }
    bool compacted() const noexcept { return compacted_; }
    void set_compacted(bool c) noexcept { compacted_ = c; }

    std::vector<VertexRecord> vertices;
    std::vector<HalfEdgeRecord> halfedges;
    std::vector<ElementRecord> elements;

    int next(int h) const { return halfedges[h].next; }
    int twin(int h) const { return halfedges[h].twin; }
    int element(int h) const { return halfedges[h].element; }
    int vertex(int h) const { return halfedges[h].vertex; }
    bool is_boundary(int h) const { return halfedges[h].twin == kNone; }

    int prev(int h) const
    {
        for (int i = 0; i < arity_ - 1; ++i) h = halfedges[h].next;
        return h;
    }
    // k-fold next.
    int advance(int h, int k) const
    {
        k %= arity_;
        for (int i = 0; i < k; ++i) h = halfedges[h].next;
        return h;
    }

    int origin(int h) const { return arity_ == 3 ? vertex(next(h)) : vertex(h); }
    int dest(int h) const { return arity_ == 3 ? vertex(prev(h)) : vertex(next(h)); }

    int num_active_vertices() const;
    int num_active_halfedges() const;
    int num_active_elements() const;
    // Undirected edge count over active elements.
    int num_edges() const;

    // Vertex ids of element e in counter-clockwise order starting at its anchor's origin.
    std::vector<int> element_vertices(int e) const;

    bool has_edge(int u, int v) const;

private:
    int arity_ = 3;
    bool compacted_ = true;
};

// Builds a compacted DCEL from counter-clockwise element vertex lists.
// Desired degrees are left unassigned.
Mesh build_mesh(const std::vector<std::vector<int>>& elements, const std::vector<Vec2>& positions,
                const std::vector<bool>& geometric, int arity);
Mesh build_mesh(const std::vector<std::vector<int>>& elements, const std::vector<Vec2>& positions,
                int arity);

struct Navigation {
    int next = kNone;
    int prev = kNone;
    int twin = kNone;
    int vertex = kNone;
    int element = kNone;
    bool is_boundary = false;
};

Navigation navigate(const Mesh& mesh, int h);

// Neighbor vertex ids of v in counter-clockwise order. For boundary vertices the
// list starts at the neighbor across the outgoing boundary half-edge.
std::vector<int> vertex_ring(const Mesh& mesh, int v);

// Outgoing half-edges of v in counter-clockwise order (boundary vertices start at
// their outgoing boundary half-edge). Sets `boundary` when the fan is open.
std::vector<int> outgoing_halfedges(const Mesh& mesh, int v, bool* boundary = nullptr);

enum class ViolationKind {
    TwinInvolution,
    TwinDirection,
    NextCycle,
    ElementAnchor,
    InactiveReference,
    DegreeMismatch,
    BoundaryFlag,
    NonManifoldVertex,
    DuplicateEdge,
    DegenerateElement,
    LowDegree,
    GeometricNotBoundary,
    CompactionLayout,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int index;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool contains(ViolationKind kind) const;
    std::string summary() const;
};

ValidationReport validate(const Mesh& mesh);

struct Remapping {
    std::vector<int> vertex;   // old id -> new id or kNone
    std::vector<int> halfedge; // old id -> new id or kNone
    std::vector<int> element;  // old id -> new id or kNone

    bool is_identity() const;
};

// Drops inactive records and restores the contiguous element layout.
Remapping compact(Mesh& mesh);

// Connectivity isomorphism: a bijection of half-edges preserving next/twin,
// vertex association and the geometric flag.
bool connectivity_isomorphic(const Mesh& a, const Mesh& b);

// Sorted list of element vertex cycles, each rotated to start at its smallest id.
std::vector<std::vector<int>> canonical_elements(const Mesh& mesh);

} // namespace meshrl
