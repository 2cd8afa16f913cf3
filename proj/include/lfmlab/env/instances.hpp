#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfmlab/env/types.hpp"

namespace lfmlab::env {

inline constexpr int kInstanceSchemaVersion = 1;
inline constexpr int kTrajectorySchemaVersion = 1;

// Everything needed to rebuild one environment instance deterministically.
// Difficulty knobs live here, not in code.
struct InstanceDescriptor {
    std::string id;
    Family family = Family::House;
    std::string split;  // "train" | "test"
    uint64_t instance_seed = 0;
    int max_steps = 50;

    // House parameters.
    GoalKind goal = GoalKind::Put;
    std::string object_kind;
    std::string receptacle_kind;
    int distractors = 4;
    int room_scale = 1;

    // Street parameters.
    int nodes = 24;
    int route_min = 4;
    int route_max = 7;
};

std::string descriptor_to_json(const InstanceDescriptor& d);
InstanceDescriptor descriptor_from_json(const std::string& line, size_t lineno = 0);

void write_instances_jsonl(const std::vector<InstanceDescriptor>& v, const std::string& path);
std::vector<InstanceDescriptor> read_instances_jsonl(const std::string& path);

// Generates `count` solvable instance descriptors, deterministically in
// (family, count, seed). Roughly one third are tagged "test"; test instances
// draw from goal-vocabulary combinations that never appear in training.
std::vector<InstanceDescriptor> gen_instances(Family family, int count, uint64_t seed);

// Exact split sizes, same generator.
std::vector<InstanceDescriptor> gen_split(Family family, int train_count, int test_count,
                                          uint64_t seed);

// Vocabulary pools (fixed; the train/test partition is over combinations).
const std::vector<std::string>& house_object_kinds();
const std::vector<std::string>& house_goal_receptacle_kinds();
const std::vector<std::string>& street_landmark_phrases();

}  // namespace lfmlab::env
