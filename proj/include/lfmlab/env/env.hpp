#pragma once

#include <memory>
#include <variant>

#include "lfmlab/env/house.hpp"
#include "lfmlab/env/street.hpp"

namespace lfmlab::env {

using EnvState = std::variant<HouseState, StreetState>;

struct ResetResult {
    EnvState state;
    Instruction instruction;
    Observation obs;
};

struct StepOutcome {
    EnvState state;
    Observation obs;
    bool done = false;
    bool success = false;
};

// Family-agnostic facade over one environment instance. Instances are
// independent values; episodes can run in parallel on separate Env objects.
class Env {
  public:
    explicit Env(const InstanceDescriptor& desc);

    const InstanceDescriptor& descriptor() const;
    const Instruction& instruction() const;
    int max_steps() const { return descriptor().max_steps; }

    ResetResult reset(uint64_t seed) const;
    StepOutcome step(const EnvState& s, const Action& action) const;
    std::vector<Action> plausible_actions(const EnvState& s) const;
    Action expert_next_action(const EnvState& s) const;
    int remaining_cost(const EnvState& s) const;
    Observation observe(const EnvState& s) const;

  private:
    std::unique_ptr<HouseEnv> house_;
    std::unique_ptr<StreetEnv> street_;
};

}  // namespace lfmlab::env
