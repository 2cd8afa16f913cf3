#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lfmlab/env/instances.hpp"
#include "lfmlab/env/types.hpp"

namespace lfmlab::env {

struct StreetLayout {
    InstanceDescriptor desc;
    Instruction instruction;

    struct Edge {
        int to = 0;
        double bearing = 0.0;  // absolute compass bearing at the source node
    };
    struct Node {
        double x = 0.0, y = 0.0;
        std::vector<Edge> edges;       // sorted by bearing
        std::vector<Landmark> landmarks;
    };

    std::vector<Node> nodes;
    int start = 0;
    int target = 0;
    std::vector<int> dist_to_target;  // exact BFS distances
};

struct StreetState {
    std::shared_ptr<const StreetLayout> layout;
    int node = 0;
    double heading = 0.0;
    int steps = 0;
};

struct StreetStepResult {
    StreetState state;
    Observation obs;
    bool done = false;
    bool success = false;
};

class StreetEnv {
  public:
    explicit StreetEnv(const InstanceDescriptor& desc);

    const InstanceDescriptor& descriptor() const { return layout_->desc; }
    const Instruction& instruction() const { return layout_->instruction; }
    const StreetLayout& layout() const { return *layout_; }

    StreetState reset(uint64_t seed) const;
    Observation observe(const StreetState& s) const;
    Observation initial_observation(const StreetState& s) const;
    StreetStepResult step(const StreetState& s, const Action& action) const;
    std::vector<Action> plausible_actions(const StreetState& s) const;
    Action expert_next_action(const StreetState& s) const;
    int remaining_cost(const StreetState& s) const;

  private:
    Observation make_obs(const StreetState& s, const std::string& result) const;

    std::shared_ptr<const StreetLayout> layout_;
};

// Deterministic layout construction; fails with Error(Env) when the random
// graph cannot satisfy the angular-separation and connectivity constraints.
std::shared_ptr<const StreetLayout> build_street_layout(const InstanceDescriptor& desc);

}  // namespace lfmlab::env
