#include "lfmlab/env/env.hpp"

#include "lfmlab/util.hpp"

namespace lfmlab::env {

Env::Env(const InstanceDescriptor& desc) {
    if (desc.family == Family::Street) {
        street_ = std::make_unique<StreetEnv>(desc);
    } else {
        house_ = std::make_unique<HouseEnv>(desc);
    }
}

const InstanceDescriptor& Env::descriptor() const {
    return house_ ? house_->descriptor() : street_->descriptor();
}

const Instruction& Env::instruction() const {
    return house_ ? house_->instruction() : street_->instruction();
}

ResetResult Env::reset(uint64_t seed) const {
    ResetResult r;
    if (house_) {
        HouseState s = house_->reset(seed);
        r.obs = house_->initial_observation(s);
        r.state = std::move(s);
        r.instruction = house_->instruction();
    } else {
        StreetState s = street_->reset(seed);
        r.obs = street_->initial_observation(s);
        r.state = std::move(s);
        r.instruction = street_->instruction();
    }
    return r;
}

StepOutcome Env::step(const EnvState& s, const Action& action) const {
    StepOutcome out;
    if (house_) {
        HouseStepResult r = house_->step(std::get<HouseState>(s), action);
        out.state = std::move(r.state);
        out.obs = std::move(r.obs);
        out.done = r.done;
        out.success = r.success;
    } else {
        StreetStepResult r = street_->step(std::get<StreetState>(s), action);
        out.state = std::move(r.state);
        out.obs = std::move(r.obs);
        out.done = r.done;
        out.success = r.success;
    }
    return out;
}

std::vector<Action> Env::plausible_actions(const EnvState& s) const {
    return house_ ? house_->plausible_actions(std::get<HouseState>(s))
                  : street_->plausible_actions(std::get<StreetState>(s));
}

Action Env::expert_next_action(const EnvState& s) const {
    return house_ ? house_->expert_next_action(std::get<HouseState>(s))
                  : street_->expert_next_action(std::get<StreetState>(s));
}

int Env::remaining_cost(const EnvState& s) const {
    return house_ ? house_->remaining_cost(std::get<HouseState>(s))
                  : street_->remaining_cost(std::get<StreetState>(s));
}

Observation Env::observe(const EnvState& s) const {
    return house_ ? house_->observe(std::get<HouseState>(s))
                  : street_->observe(std::get<StreetState>(s));
}

}  // namespace lfmlab::env
