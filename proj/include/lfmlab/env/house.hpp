#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lfmlab/env/instances.hpp"
#include "lfmlab/env/types.hpp"

namespace lfmlab::env {

// Immutable per-instance data: receptacles, object roster, instruction.
struct HouseLayout {
    InstanceDescriptor desc;
    Instruction instruction;

    struct Recep {
        std::string kind;
        int index = 1;
        std::string name;  // "drawer 2"
        bool openable = false;
        bool initially_open = false;
    };
    struct Obj {
        std::string kind;
        int index = 1;
        std::string name;  // "soapbar 1"
        int initial_loc = 0;
        bool goal_object = false;
    };

    std::vector<Recep> receps;
    std::vector<Obj> objects;
    std::vector<int> goal_recep_idx;   // receptacles of the goal kind
    std::vector<int> goal_object_idx;  // objects of the goal kind
    int sink_idx = -1;
    int microwave_idx = -1;
    int goal_need = 1;  // objects required in place (2 for put-two)

    int loc_id(int recep_idx) const { return 11 + recep_idx; }
};

// Mutable episode state. Copyable value; the layout is shared immutable data.
struct HouseState {
    std::shared_ptr<const HouseLayout> layout;

    struct ObjDyn {
        int loc = 0;  // receptacle index, or -1 while held
        bool clean = false;
        bool hot = false;
        bool sliced = false;
    };

    int agent_loc = -1;  // -1 = middle of the room
    int held = -1;       // object index or -1
    std::vector<ObjDyn> objs;
    uint32_t open_mask = 0;
    int steps = 0;

    bool recep_open(int r) const { return (open_mask >> r) & 1u; }
    bool goal_satisfied() const;
};

struct HouseStepResult {
    HouseState state;
    Observation obs;
    bool done = false;
    bool success = false;
};

// Exact shortest-plan costs over the goal-relevant projection of the state
// space. Built once per instance by flooding the projected graph and running
// a reverse breadth-first search from the goal set.
class HousePlanner {
  public:
    explicit HousePlanner(std::shared_ptr<const HouseLayout> layout);

    // Minimum number of actions from `s` to goal satisfaction.
    int remaining_cost(const HouseState& s) const;

  private:
    void build() const;
    uint64_t encode(const HouseState& s) const;

    std::shared_ptr<const HouseLayout> layout_;
    mutable bool built_ = false;
    mutable std::unordered_map<uint64_t, int32_t> cost_;
};

class HouseEnv {
  public:
    explicit HouseEnv(const InstanceDescriptor& desc);

    const InstanceDescriptor& descriptor() const { return layout_->desc; }
    const Instruction& instruction() const { return layout_->instruction; }
    const HouseLayout& layout() const { return *layout_; }

    HouseState reset(uint64_t seed) const;
    Observation observe(const HouseState& s) const;
    Observation initial_observation(const HouseState& s) const;

    // Validates the action against plausible_actions; implausible actions
    // raise Error(Env) rather than silently doing nothing.
    HouseStepResult step(const HouseState& s, const Action& action) const;

    std::vector<Action> plausible_actions(const HouseState& s) const;

    Action expert_next_action(const HouseState& s) const;
    int remaining_cost(const HouseState& s) const;

  private:
    HouseStepResult step_unchecked(const HouseState& s, const Action& action) const;
    Observation make_obs(const HouseState& s, const std::string& result) const;
    std::string verbalizable_item_name(size_t i, const HouseState& s) const;

    std::shared_ptr<const HouseLayout> layout_;
    std::unique_ptr<HousePlanner> planner_;
    std::vector<std::string> filler_actions_;  // house-XL inflation
};

// Builds the immutable layout for a descriptor. Fails with Error(Env) when
// the parameter combination cannot produce a solvable instance.
std::shared_ptr<const HouseLayout> build_house_layout(const InstanceDescriptor& desc);

}  // namespace lfmlab::env
