#pragma once

// Half-edge convolution policy: per-half-edge features, the cycle and twin
// gathers, the encoder, action templates around an anchor half-edge, and the
// masked action distribution.

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meshrl/mesh.hpp"
#include "meshrl/tensor.hpp"

namespace meshrl {

enum class PolicyErrorKind { InvalidConfig, NotCompacted, ShapeMismatch, InactiveHalfEdge, AlreadyOptimal, AllMasked };

const char* to_string(PolicyErrorKind kind);

class PolicyError : public std::runtime_error {
public:
    PolicyError(PolicyErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    PolicyErrorKind kind() const noexcept { return kind_; }

private:
    PolicyErrorKind kind_;
};

struct EncoderConfig {
    int arity = 4;
    int feature_dim = 64;
    int num_blocks = 4;
    int template_depth = 2;

    int actions_per_halfedge() const { return arity == 3 ? 3 : 5; }
    // 1 + a + a^2 + ... + a^D
    int template_length() const;
    void check() const;
};

struct PolicyWeights {
    struct Block {
        ad::Tensor w;        // F x (arity + 1) F
        ad::Tensor b;        // F x 1
        ad::Tensor gain;     // F x 1
        ad::Tensor beta;     // F x 1
        ad::Tensor boundary; // F x 1, twin feature of boundary half-edges
    };

    EncoderConfig config;
    ad::Tensor in_w; // F x 2
    ad::Tensor in_b;
    std::vector<Block> blocks;
    ad::Tensor out_w; // N_a x F
    ad::Tensor out_b;

    static PolicyWeights random(const EncoderConfig& config, std::mt19937_64& rng);

    // Stable names, used by checkpoints and the optimizer.
    std::vector<std::pair<std::string, ad::Tensor*>> named();
    std::vector<ad::Tensor*> parameters();
};

// Column h = (degree, degree - desired degree) of the vertex of half-edge h.
ad::Matrix initial_features(const Mesh& mesh);

// Column h of the result stacks x(h), x(next h), ..., x(next^{arity-1} h).
// Works on the compacted layout through reshapes and row gathers only.
ad::Var cycle(ad::Var x, int arity);

// Column h of the result is x(twin h), or the boundary column when h has no twin.
ad::Var twin_gather(ad::Var x, const Mesh& mesh, ad::Var boundary_feature);
// Same with an explicit twin table, kNone marking boundary half-edges.
ad::Var twin_gather(ad::Var x, const std::vector<int>& twins, ad::Var boundary_feature);

// Logits of shape N_a x N_h.
ad::Var encode(ad::Tape& tape, const Mesh& mesh, PolicyWeights& weights);
ad::Var encode_features(ad::Tape& tape, const ad::Matrix& features, const Mesh& mesh,
                        PolicyWeights& weights);

// Fixed-size expansion tree around an anchor. Slot i has children
// i * arity + 1 + j: next^{j+1} for j < arity - 1, then twin. Revisited
// half-edges and missing twins are dummies (kNone).
struct Template {
    int anchor = kNone;
    int num_actions = 0;
    std::vector<int> slots;
    std::vector<char> mask; // index slot * num_actions + action

    bool valid(int slot, int action) const { return mask[slot * num_actions + action] != 0; }
    int num_valid() const;
};

std::vector<int> template_slots(const Mesh& mesh, int h, int arity, int depth);
Template build_template(const Mesh& mesh, int h, const EncoderConfig& config);

// Every half-edge by decreasing local score of its template; ties in random order.
std::vector<int> rank_anchors(const Mesh& mesh, const EncoderConfig& config, std::mt19937_64& rng);
// Highest local score, ties broken at random. AlreadyOptimal when s = s*.
int select_anchor(const Mesh& mesh, const EncoderConfig& config, std::mt19937_64& rng);

// 1 x (N_a * N_l) probabilities, entry slot * N_a + action; masked entries are 0.
ad::Var action_distribution(ad::Var logits, const Template& tpl);
ad::Var log_prob(ad::Var probs, int index);
// -sum p log p over the unmasked entries.
ad::Var entropy(ad::Var probs, const Template& tpl);

// The whole elements holding every half-edge within num_blocks hops of the
// template, with features read off the full mesh. Its logits at the template
// slots equal those of the full mesh, at a cost independent of mesh size.
struct Patch {
    ad::Matrix features;    // 2 x n, element-major like a compacted mesh
    std::vector<int> twins; // kNone where the twin is missing or outside
    Template tpl;           // slots renumbered into the patch
};

Patch extract_patch(const Mesh& mesh, const Template& tpl, int num_blocks);
ad::Var encode_patch(ad::Tape& tape, const Patch& patch, PolicyWeights& weights);
// action_distribution(encode_patch(...), patch.tpl).
ad::Var patch_distribution(ad::Tape& tape, const Patch& patch, PolicyWeights& weights);

} // namespace meshrl
