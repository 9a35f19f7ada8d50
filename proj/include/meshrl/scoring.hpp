#pragma once

// Vertex irregularity objective: desired degrees, global and optimum scores,
// rewards, discounted returns and normalized advantages.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "meshrl/mesh.hpp"

namespace meshrl {

class ScoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Target angle per element corner: 60 for triangles, 90 for quads.
inline int alpha_for_arity(int arity) { return arity == 3 ? 60 : 90; }

// Desired degree of an interior (no angle) or boundary vertex. Boundary values
// round theta / alpha half away from zero, then add one, with a floor of 2.
int desired_degree(std::optional<double> theta_deg, int alpha);

// Desired degree of a vertex created by an edit: interior 360/alpha; boundary
// vertices sit on a straight edge (theta = 180).
inline int new_vertex_desired_degree(int arity, bool boundary)
{
    if (!boundary) return arity == 3 ? 6 : 4;
    return arity == 3 ? 4 : 3;
}

// Interior angle of the boundary at v in degrees, measured inside the mesh.
double boundary_angle_deg(const Mesh& mesh, int v);

void assign_desired_degrees(Mesh& mesh, int alpha);
inline void assign_desired_degrees(Mesh& mesh) { assign_desired_degrees(mesh, alpha_for_arity(mesh.arity())); }

struct ScoreSnapshot {
    int s = 0;
    int s_star = 0;
    std::vector<int> irregularity; // per vertex id; zero for inactive vertices
};

ScoreSnapshot global_score(const Mesh& mesh);

// Signed sum of irregularities over active vertices; invariant under every edit.
int irregularity_sum(const Mesh& mesh);

inline int reward(int s_before, int s_after) { return s_before - s_after; }

struct RewardTrace {
    std::vector<int> rewards;
    double gamma = 1.0;
    std::vector<double> returns;
    std::vector<double> advantages;
};

// `scores[t]` is the score before step t. Throws ScoringError when a decision
// step is already optimal.
RewardTrace returns_and_advantages(std::span<const int> rewards, double gamma,
                                   std::span<const int> scores, int s_star);

// Sum of |irregularity| over the distinct associated vertices of the given
// half-edges; kNone entries are dummies and contribute nothing.
int local_score(const Mesh& mesh, std::span<const int> halfedges);

} // namespace meshrl
