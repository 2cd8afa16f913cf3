#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lfmlab/env/env.hpp"

namespace lfmlab::env {

struct TrajStep {
    std::string pre_obs;   // verbalized observation the agent acted on
    Action action;
    std::string post_obs;  // verbalized observation after the action
    bool success = false;
};

// One episode: instruction plus the ordered step records. Raw states are the
// privileged handles used by oracle annotators; they never serialize.
struct Trajectory {
    std::string instance_id;
    std::string instruction;
    uint64_t episode_seed = 0;
    std::string initial_obs;
    std::vector<TrajStep> steps;
    bool success = false;

    std::vector<EnvState> states;  // states[t] precedes steps[t]; size = steps+1
};

inline constexpr size_t kContextSteps = 20;

// Policy context: instruction, up to 20 most recent (observation, action)
// pairs, and the current observation.
struct ContextWindow {
    std::string instruction;
    std::vector<std::pair<std::string, std::string>> history;  // oldest first
    std::string current_obs;
};

// Context in which step t (0-based) was taken; t may equal steps.size() for
// the context following the final step.
ContextWindow context_at(const Trajectory& traj, size_t t);

// Selector receives the context, the plausible actions (sorted), and the
// privileged state (experts use it; learned policies must not).
using ActionSelector =
    std::function<Action(const ContextWindow&, const std::vector<Action>&, const EnvState&)>;

Trajectory run_episode(const Env& env, uint64_t episode_seed, const ActionSelector& select);

// Trajectory JSONL: one record per step.
void write_trajectories_jsonl(const std::vector<Trajectory>& trajs, const std::string& path);
std::vector<Trajectory> read_trajectories_jsonl(const std::string& path);  // states are empty

}  // namespace lfmlab::env
