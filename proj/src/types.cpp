#include "lfmlab/env/types.hpp"

#include "lfmlab/util.hpp"

namespace lfmlab::env {

std::string family_name(Family f) {
    switch (f) {
        case Family::House:
            return "house-v0";
        case Family::HouseXL:
            return "house-xl";
        case Family::Street:
            return "street-v0";
    }
    fail(ErrorKind::Env, "bad family enum");
}

Family family_from_name(const std::string& name) {
    if (name == "house-v0") return Family::House;
    if (name == "house-xl") return Family::HouseXL;
    if (name == "street-v0") return Family::Street;
    fail(ErrorKind::Env, "unknown environment family: '" + name + "'");
}

std::string goal_kind_name(GoalKind k) {
    switch (k) {
        case GoalKind::Put:
            return "put";
        case GoalKind::PutClean:
            return "put-clean";
        case GoalKind::CleanPut:
            return "clean-put";
        case GoalKind::HeatPut:
            return "heat-put";
        case GoalKind::PutTwo:
            return "put-two";
        case GoalKind::Navigate:
            return "navigate";
    }
    fail(ErrorKind::Env, "bad goal enum");
}

GoalKind goal_kind_from_name(const std::string& name) {
    if (name == "put") return GoalKind::Put;
    if (name == "put-clean") return GoalKind::PutClean;
    if (name == "clean-put") return GoalKind::CleanPut;
    if (name == "heat-put") return GoalKind::HeatPut;
    if (name == "put-two") return GoalKind::PutTwo;
    if (name == "navigate") return GoalKind::Navigate;
    fail(ErrorKind::Env, "unknown goal family: '" + name + "'");
}

}  // namespace lfmlab::env
