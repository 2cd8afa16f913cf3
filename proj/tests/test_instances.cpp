#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "lfmlab/env/env.hpp"
#include "lfmlab/env/instances.hpp"
#include "lfmlab/env/trajectory.hpp"
#include "lfmlab/util.hpp"

using namespace lfmlab;
using namespace lfmlab::env;

TEST_CASE("gen_instances partitions train and test disjointly") {
    auto v = gen_instances(Family::House, 300, 0);
    REQUIRE(v.size() == 300);
    std::set<std::string> train_ids, test_ids;
    std::set<std::string> train_combos, test_combos;
    for (const auto& d : v) {
        std::string combo = goal_kind_name(d.goal) + "|" + d.object_kind + "|" + d.receptacle_kind;
        if (d.split == "train") {
            train_ids.insert(d.id);
            train_combos.insert(combo);
        } else {
            test_ids.insert(d.id);
            test_combos.insert(combo);
        }
    }
    CHECK(train_ids.size() == 200);
    CHECK(test_ids.size() == 100);
    // Goal-vocabulary combinations never cross the split.
    for (const auto& c : test_combos) CHECK(train_combos.count(c) == 0);
}

TEST_CASE("gen_instances is deterministic") {
    auto a = gen_instances(Family::Street, 100, 0);
    auto b = gen_instances(Family::Street, 100, 0);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(descriptor_to_json(a[i]) == descriptor_to_json(b[i]));
    }
}

TEST_CASE("every generated instance is expert-solvable within the horizon") {
    for (auto family : {Family::House, Family::Street}) {
        auto v = gen_split(family, 12, 6, 7);
        for (const auto& d : v) {
            Env env(d);
            auto r = env.reset(0);
            int c = env.remaining_cost(r.state);
            CHECK(c >= 1);
            CHECK(c <= d.max_steps - 2);
            // Walk the expert to success.
            EnvState s = r.state;
            bool success = false;
            for (int t = 0; t < d.max_steps && !success; ++t) {
                auto out = env.step(s, env.expert_next_action(s));
                success = out.success;
                s = out.state;
            }
            CHECK(success);
        }
    }
}

TEST_CASE("descriptor JSONL round-trips") {
    auto v = gen_split(Family::HouseXL, 4, 2, 3);
    std::string path = (std::filesystem::temp_directory_path() / "lfmlab_inst.jsonl").string();
    write_instances_jsonl(v, path);
    auto back = read_instances_jsonl(path);
    REQUIRE(back.size() == v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        CHECK(descriptor_to_json(back[i]) == descriptor_to_json(v[i]));
    }
    std::remove(path.c_str());
}

TEST_CASE("unknown family name is rejected") {
    CHECK_THROWS_AS(family_from_name("warehouse-v2"), Error);
}

TEST_CASE("trajectory JSONL round-trips the step records") {
    auto v = gen_split(Family::House, 2, 0, 5);
    Env env(v[0]);
    auto traj = run_episode(env, 0, [&](const ContextWindow&, const std::vector<Action>&,
                                        const EnvState& st) { return env.expert_next_action(st); });
    CHECK(traj.success);
    std::string path = (std::filesystem::temp_directory_path() / "lfmlab_traj.jsonl").string();
    write_trajectories_jsonl({traj}, path);
    auto back = read_trajectories_jsonl(path);
    REQUIRE(back.size() == 1);
    CHECK(back[0].instruction == traj.instruction);
    REQUIRE(back[0].steps.size() == traj.steps.size());
    for (size_t i = 0; i < traj.steps.size(); ++i) {
        CHECK(back[0].steps[i].action == traj.steps[i].action);
        CHECK(back[0].steps[i].post_obs == traj.steps[i].post_obs);
    }
    CHECK(back[0].success);
    std::remove(path.c_str());
}

TEST_CASE("context_at caps history at twenty steps") {
    auto v = gen_split(Family::House, 1, 0, 11);
    Env env(v[0]);
    // A wandering policy that never finishes quickly: cycle go-to actions.
    auto traj = run_episode(env, 0, [&](const ContextWindow&, const std::vector<Action>& acts,
                                        const EnvState&) {
        for (const auto& a : acts) {
            if (starts_with(a, "go to ")) return a;
        }
        return acts.front();
    });
    REQUIRE(traj.steps.size() >= 25);
    auto ctx = context_at(traj, 25);
    CHECK(ctx.history.size() == kContextSteps);
    CHECK(ctx.current_obs == traj.steps[24].post_obs);
    CHECK(ctx.history.front().first == traj.steps[5].pre_obs);
    auto ctx0 = context_at(traj, 0);
    CHECK(ctx0.history.empty());
    CHECK(ctx0.current_obs == traj.initial_obs);
}
