#pragma once

// Mesh improvement as an episodic game: reset to a random polygon mesh, step
// by editing, reward the drop in score. PPO training and evaluation.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshrl/mesh.hpp"
#include "meshrl/meshgen.hpp"
#include "meshrl/policy.hpp"
#include "meshrl/tensor.hpp"

namespace meshrl {

enum class EnvErrorKind { InvalidConfig, InvalidAction, EpisodeDone, EmptyBatch };

const char* to_string(EnvErrorKind kind);

class EnvError : public std::runtime_error {
public:
    EnvError(EnvErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    EnvErrorKind kind() const noexcept { return kind_; }

private:
    EnvErrorKind kind_;
};

struct PpoConfig {
    EncoderConfig encoder;
    double gamma = 0.9;
    double clip_epsilon = 0.2;
    double entropy_coefficient = 0.01;
    int epochs_per_iteration = 4;
    int episodes_per_iteration = 32;
    int minibatch_size = 64; // decision steps per optimizer step
    double learning_rate = 1e-3;
    double budget_factor = 1.0;
    int poly_min = 10;
    int poly_max = 20;
    int best_of_k = 10;

    // Training schedule.
    int iterations = 100;
    int eval_every = 5;
    int eval_meshes = 20;
    double time_limit_seconds = 0.0; // 0: no limit
    std::uint64_t seed = 1;

    int arity() const { return encoder.arity; }
    // Quad defaults use 10-20 sided polygons, triangle defaults 10-30.
    static PpoConfig defaults(int arity);
    void check() const;
};

struct EnvState {
    Mesh mesh{4};
    int s_initial = 0;
    int s_current = 0;
    int s_star = 0;
    int steps_taken = 0;
    int step_budget = 0;
    bool done = false;
};

// Wraps a mesh with assigned desired degrees; compacts it.
EnvState make_env(Mesh mesh, double budget_factor);
// Random polygon with poly_min..poly_max sides, refined triangulation,
// Catmull-Clark for quads, desired degrees. done when already optimal.
EnvState reset(const PpoConfig& config, Rng& rng);
Mesh random_initial_mesh(int arity, int poly_min, int poly_max, Rng& rng);

struct StepResult {
    int reward = 0;
    bool done = false;
};

// Applies the edit, then every cleanup on quad meshes, then compacts.
StepResult step(EnvState& env, int h, int action);

struct StepRecord {
    Patch patch; // neighbourhood the decision was made on
    int index = 0; // slot * N_a + action
    double log_prob = 0.0;
    int reward = 0;
    int score_before = 0;
};

struct Trajectory {
    std::vector<StepRecord> steps; // patches are empty unless kept
    int s0 = 0;
    int s_star = 0;
    int s_end = 0;
    int s_best = 0;
    int step_budget = 0;
    bool stalled = false; // no anchor had a valid action
    Mesh best_mesh{4};
    Mesh final_mesh{4};

    int total_reward() const;
    double normalized_best() const; // (s0 - s_best) / (s0 - s*)
};

struct RolloutOptions {
    bool greedy = false;
    bool keep_patches = true;
    // Sees the state after every step together with the step's record.
    std::function<void(const EnvState&, const StepRecord&)> on_step;
};

Trajectory rollout(PolicyWeights& weights, EnvState env, Rng& rng, RolloutOptions opts = {});

struct PpoStats {
    int samples = 0;
    double mean_entropy = 0.0;
    double clip_fraction = 0.0;
    double mean_advantage = 0.0;
};

struct PpoSample {
    const StepRecord* step = nullptr;
    double advantage = 0.0; // normalized return
};

// Every decision step of the batch with its advantage. EmptyBatch when none.
std::vector<PpoSample> ppo_samples(const std::vector<Trajectory>& batch, const PpoConfig& config);

// Adds the gradient of
//   -mean(min(r A, clip(r, 1 - eps, 1 + eps) A)) - c * mean(entropy)
// over the samples into the parameter gradients, r = p_new / p_old.
PpoStats accumulate_ppo_gradient(PolicyWeights& weights, std::span<const PpoSample> samples,
                                 const PpoConfig& config);

// Epochs of shuffled minibatches, one Adam step each.
PpoStats ppo_update(PolicyWeights& weights, ad::AdamState& adam, const std::vector<Trajectory>& batch,
                    const PpoConfig& config, Rng& rng);

struct EvalConfig {
    int arity = 4;
    int k = 1;
    int num_meshes = 100;
    int poly_min = 10;
    int poly_max = 20;
    double budget_factor = 1.0;
    std::uint64_t seed = 0;
    bool greedy = false;
};

struct EvalStats {
    double mean = 0.0;
    double std = 0.0;
    std::vector<double> per_mesh;
};

// Mesh i comes from its own seed stream; rollout j of mesh i too, so a
// larger k only adds rollouts. Already-optimal meshes are redrawn.
EvalStats evaluate(PolicyWeights& weights, const EvalConfig& config);

struct CurveRow {
    int iteration = 0;
    double mean = 0.0;
    double std = 0.0;
    long episodes = 0;
    double wall_time = 0.0;
};

struct TrainResult {
    PolicyWeights weights;
    std::vector<CurveRow> curve;
};

// Called after every evaluation with the row just recorded.
using TrainCallback = std::function<void(const CurveRow&, PolicyWeights&)>;

TrainResult train(const PpoConfig& config, const TrainCallback& on_eval = {});

// Evaluation meshes and training meshes draw from disjoint seed streams.
EvalConfig training_eval_config(const PpoConfig& config);

enum class Stream { Init, Train, Update, EvalMesh, EvalRollout };
// Independent generator per (stream, seed, a, b).
Rng stream_rng(Stream stream, std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0);

} // namespace meshrl
