#include "lfmlab/env/trajectory.hpp"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "lfmlab/util.hpp"
#include "lfmlab/verbalize.hpp"

namespace lfmlab::env {

using nlohmann::json;

ContextWindow context_at(const Trajectory& traj, size_t t) {
    ContextWindow ctx;
    ctx.instruction = traj.instruction;
    ctx.current_obs = t == 0 ? traj.initial_obs : traj.steps[t - 1].post_obs;
    size_t begin = t > kContextSteps ? t - kContextSteps : 0;
    for (size_t i = begin; i < t; ++i) {
        ctx.history.emplace_back(traj.steps[i].pre_obs, traj.steps[i].action);
    }
    return ctx;
}

Trajectory run_episode(const Env& env, uint64_t episode_seed, const ActionSelector& select) {
    Trajectory traj;
    traj.instance_id = env.descriptor().id;
    traj.episode_seed = episode_seed;

    ResetResult r = env.reset(episode_seed);
    traj.instruction = r.instruction.text;
    traj.initial_obs = verbal::verbalize(r.obs);
    traj.states.push_back(r.state);

    EnvState state = r.state;
    std::string cur_obs = traj.initial_obs;
    bool done = r.obs.done;
    while (!done) {
        ContextWindow ctx = context_at(traj, traj.steps.size());
        std::vector<Action> candidates = env.plausible_actions(state);
        Action action = select(ctx, candidates, state);
        StepOutcome out = env.step(state, action);
        TrajStep step;
        step.pre_obs = cur_obs;
        step.action = action;
        step.post_obs = verbal::verbalize(out.obs);
        step.success = out.success;
        traj.steps.push_back(std::move(step));
        traj.states.push_back(out.state);
        state = std::move(out.state);
        cur_obs = traj.steps.back().post_obs;
        done = out.done;
        traj.success = out.success;
    }
    return traj;
}

void write_trajectories_jsonl(const std::vector<Trajectory>& trajs, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    for (const auto& t : trajs) {
        for (size_t i = 0; i < t.steps.size(); ++i) {
            json j;
            j["schema_version"] = kTrajectorySchemaVersion;
            j["instance_id"] = t.instance_id;
            j["episode_seed"] = t.episode_seed;
            j["instruction"] = t.instruction;
            j["step"] = i + 1;  // steps are 1-based everywhere user-visible
            j["observation"] = t.steps[i].pre_obs;
            j["action"] = t.steps[i].action;
            j["result"] = t.steps[i].post_obs;
            j["success"] = t.steps[i].success;
            out << j.dump() << '\n';
        }
    }
}

std::vector<Trajectory> read_trajectories_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    std::vector<Trajectory> out;
    std::string line;
    size_t lineno = 0;
    std::string cur_key;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            fail(ErrorKind::Parse, "malformed trajectory record at line " + std::to_string(lineno));
        }
        if (j.at("schema_version").get<int>() != kTrajectorySchemaVersion) {
            fail(ErrorKind::Parse,
                 "unsupported trajectory schema_version at line " + std::to_string(lineno));
        }
        std::string key = j.at("instance_id").get<std::string>() + "#" +
                          std::to_string(j.at("episode_seed").get<uint64_t>());
        if (out.empty() || key != cur_key) {
            Trajectory t;
            t.instance_id = j.at("instance_id").get<std::string>();
            t.episode_seed = j.at("episode_seed").get<uint64_t>();
            t.instruction = j.at("instruction").get<std::string>();
            out.push_back(std::move(t));
            cur_key = key;
        }
        Trajectory& t = out.back();
        TrajStep step;
        step.pre_obs = j.at("observation").get<std::string>();
        if (t.steps.empty()) t.initial_obs = step.pre_obs;
        step.action = j.at("action").get<std::string>();
        step.post_obs = j.at("result").get<std::string>();
        step.success = j.at("success").get<bool>();
        t.steps.push_back(std::move(step));
        t.success = t.steps.back().success;
    }
    return out;
}

}  // namespace lfmlab::env
