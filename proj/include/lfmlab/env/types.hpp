#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lfmlab::env {

// Canonical action strings, e.g. "go to drawer 2" or "slightly to your right".
using Action = std::string;

enum class Family { House, HouseXL, Street };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

enum class GoalKind {
    Put,       // put a {obj} in {recep}
    PutClean,  // put a clean {obj} in {recep}
    CleanPut,  // clean some {obj} and put it in {recep}
    HeatPut,   // heat some {obj} and put it in {recep}
    PutTwo,    // put two {obj} in {recep}
    Navigate,  // street route
};

std::string goal_kind_name(GoalKind k);
GoalKind goal_kind_from_name(const std::string& name);

struct Instruction {
    std::string text;
    GoalKind goal = GoalKind::Put;
    // House goals.
    std::string object_kind;
    std::string receptacle_kind;
    // Street goal.
    int target_node = -1;
};

// One visible item with its rendered attributes.
struct SceneItem {
    std::string name;  // "soapbar 1"
    bool clean = false;
    bool hot = false;
    bool sliced = false;
};

struct SceneReceptacle {
    std::string name;  // "drawer 2"
    bool openable = false;
    bool open = false;
    std::vector<SceneItem> contents;  // only populated when visible
};

struct Landmark {
    std::string phrase;
    double bearing = 0.0;  // absolute compass degrees in [0, 360)
};

// Partial observation: only what is visible from the agent's location/heading.
struct Observation {
    Family family = Family::House;
    std::string result_text;  // outcome of the last action (or the opening text)
    bool done = false;
    bool success = false;

    // House fields.
    std::vector<SceneReceptacle> here;  // receptacles at the current location
    std::vector<SceneItem> inventory;

    // Street fields.
    double heading = 0.0;
    std::vector<Landmark> landmarks;
    std::vector<double> edge_bearings;  // absolute bearings of outgoing edges
};

}  // namespace lfmlab::env
