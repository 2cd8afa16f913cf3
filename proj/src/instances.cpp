#include "lfmlab/env/instances.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "lfmlab/util.hpp"

namespace lfmlab::env {

using nlohmann::json;

const std::vector<std::string>& house_object_kinds() {
    static const std::vector<std::string> kinds = {
        "alarmclock", "apple",  "book",   "bread",  "candle", "cup",    "egg",    "lettuce",
        "mug",        "pan",    "plate",  "potato", "soapbar", "spatula", "sponge", "tomato",
    };
    return kinds;
}

const std::vector<std::string>& house_goal_receptacle_kinds() {
    static const std::vector<std::string> kinds = {
        "cabinet", "countertop", "diningtable", "drawer", "fridge", "shelf", "sidetable",
    };
    return kinds;
}

const std::vector<std::string>& street_landmark_phrases() {
    static const std::vector<std::string> phrases = {
        "white van",          "red brick building", "blue awning",       "fire hydrant",
        "yellow taxi",        "green fence",        "mail truck",        "stop sign",
        "street lamp",        "flower stand",       "newspaper stand",   "black gate",
        "glass storefront",   "row of bicycles",    "parked bus",        "construction barrier",
        "hot dog cart",       "brown brownstone",   // train-only pool ends 6 before the tail
        "subway entrance",    "blue scaffolding",   "marble fountain",   "orange cone cluster",
        "ivy-covered wall",   "silver food truck",
    };
    return phrases;
}

std::string descriptor_to_json(const InstanceDescriptor& d) {
    json j;
    j["schema_version"] = kInstanceSchemaVersion;
    j["id"] = d.id;
    j["family"] = family_name(d.family);
    j["split"] = d.split;
    j["instance_seed"] = d.instance_seed;
    j["max_steps"] = d.max_steps;
    if (d.family == Family::Street) {
        j["goal"] = "navigate";
        j["nodes"] = d.nodes;
        j["route_min"] = d.route_min;
        j["route_max"] = d.route_max;
    } else {
        j["goal"] = goal_kind_name(d.goal);
        j["object_kind"] = d.object_kind;
        j["receptacle_kind"] = d.receptacle_kind;
        j["distractors"] = d.distractors;
        j["room_scale"] = d.room_scale;
    }
    return j.dump();
}

InstanceDescriptor descriptor_from_json(const std::string& line, size_t lineno) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        fail(ErrorKind::Parse, "malformed instance record at line " + std::to_string(lineno));
    }
    if (!j.contains("schema_version") ||
        j["schema_version"].get<int>() != kInstanceSchemaVersion) {
        fail(ErrorKind::Parse, "unsupported instance schema_version at line " +
                                   std::to_string(lineno));
    }
    InstanceDescriptor d;
    d.id = j.at("id").get<std::string>();
    d.family = family_from_name(j.at("family").get<std::string>());
    d.split = j.at("split").get<std::string>();
    d.instance_seed = j.at("instance_seed").get<uint64_t>();
    d.max_steps = j.at("max_steps").get<int>();
    d.goal = goal_kind_from_name(j.at("goal").get<std::string>());
    if (d.family == Family::Street) {
        d.nodes = j.at("nodes").get<int>();
        d.route_min = j.at("route_min").get<int>();
        d.route_max = j.at("route_max").get<int>();
    } else {
        d.object_kind = j.at("object_kind").get<std::string>();
        d.receptacle_kind = j.at("receptacle_kind").get<std::string>();
        d.distractors = j.at("distractors").get<int>();
        d.room_scale = j.at("room_scale").get<int>();
    }
    return d;
}

void write_instances_jsonl(const std::vector<InstanceDescriptor>& v, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    for (const auto& d : v) out << descriptor_to_json(d) << '\n';
}

std::vector<InstanceDescriptor> read_instances_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    std::vector<InstanceDescriptor> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        out.push_back(descriptor_from_json(line, lineno));
    }
    return out;
}

namespace {

// A goal-vocabulary combination belongs to the held-out (test) pool when its
// hash lands in the bottom quarter.
bool combo_is_test(GoalKind g, const std::string& obj, const std::string& recep) {
    uint64_t h = mix64(hash_str(goal_kind_name(g)), hash_str(obj), hash_str(recep));
    return h % 4 == 0;
}

const std::vector<GoalKind>& house_goal_kinds() {
    static const std::vector<GoalKind> kinds = {GoalKind::Put, GoalKind::PutClean,
                                                GoalKind::CleanPut, GoalKind::HeatPut,
                                                GoalKind::PutTwo};
    return kinds;
}

}  // namespace

std::vector<InstanceDescriptor> gen_split(Family family, int train_count, int test_count,
                                          uint64_t seed) {
    if (train_count < 0 || test_count < 0 || train_count + test_count < 1) {
        fail(ErrorKind::Env, "instance counts must be positive");
    }
    std::vector<InstanceDescriptor> out;
    Rng rng(mix64(seed, hash_str(family_name(family)), hash_str("gen")));
    int made_train = 0, made_test = 0;
    uint64_t counter = 0;
    while (made_train < train_count || made_test < test_count) {
        InstanceDescriptor d;
        d.family = family;
        d.instance_seed = mix64(seed, hash_str(family_name(family)), ++counter);
        if (family == Family::Street) {
            d.goal = GoalKind::Navigate;
            d.max_steps = 40;
            // Street splits are positional: the landmark pool tail is
            // reserved for test instances (see build_street_layout).
            bool make_test = made_test < test_count &&
                             (made_train >= train_count || rng.below(3) == 0);
            d.split = make_test ? "test" : "train";
        } else {
            d.max_steps = 50;
            d.goal = house_goal_kinds()[rng.below(house_goal_kinds().size())];
            d.object_kind = house_object_kinds()[rng.below(house_object_kinds().size())];
            d.receptacle_kind =
                house_goal_receptacle_kinds()[rng.below(house_goal_receptacle_kinds().size())];
            d.split = combo_is_test(d.goal, d.object_kind, d.receptacle_kind) ? "test" : "train";
        }
        int& made = d.split == "test" ? made_test : made_train;
        int want = d.split == "test" ? test_count : train_count;
        if (made >= want) continue;  // pool full; draw again
        d.id = family_name(family) + "-" + d.split + "-" + std::to_string(made);
        ++made;
        out.push_back(d);
    }
    // Instances are solvable by construction: house layouts always contain the
    // goal receptacle kind, the sink and the microwave, movement is flat, and
    // goal objects start in a non-satisfying configuration; street layouts
    // pick the target from nodes at a bounded reachable distance. The test
    // suite additionally replays the expert planner over every instance.
    return out;
}

std::vector<InstanceDescriptor> gen_instances(Family family, int count, uint64_t seed) {
    if (count < 1) fail(ErrorKind::Env, "count must be >= 1");
    int test = count / 3;
    return gen_split(family, count - test, test, seed);
}

}  // namespace lfmlab::env
