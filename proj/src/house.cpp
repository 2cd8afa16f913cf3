#include "lfmlab/env/house.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

#include "lfmlab/util.hpp"

namespace lfmlab::env {

namespace {

enum class AttrNeed { None, Clean, Hot };

AttrNeed attr_need(GoalKind g) {
    switch (g) {
        case GoalKind::PutClean:
        case GoalKind::CleanPut:
            return AttrNeed::Clean;
        case GoalKind::HeatPut:
            return AttrNeed::Hot;
        default:
            return AttrNeed::None;
    }
}

bool is_openable_kind(const std::string& kind) {
    return kind == "drawer" || kind == "cabinet" || kind == "fridge" || kind == "microwave";
}

const std::vector<std::string>& extra_recep_kinds() {
    static const std::vector<std::string> kinds = {"sidetable", "shelf", "garbagecan"};
    return kinds;
}

std::string instruction_text(GoalKind g, const std::string& obj, const std::string& recep) {
    switch (g) {
        case GoalKind::Put:
            return "put a " + obj + " in " + recep;
        case GoalKind::PutClean:
            return "put a clean " + obj + " in " + recep;
        case GoalKind::CleanPut:
            return "clean some " + obj + " and put it in " + recep;
        case GoalKind::HeatPut:
            return "heat some " + obj + " and put it in " + recep;
        case GoalKind::PutTwo:
            return "put two " + obj + " in " + recep;
        default:
            fail(ErrorKind::Env, "not a house goal");
    }
}

// Verbs used only to inflate the action space of house-XL instances.
const std::array<const char*, 5> kFillerVerbs = {"examine", "poke", "smell", "tilt", "touch"};

}  // namespace

bool HouseState::goal_satisfied() const {
    const auto& L = *layout;
    AttrNeed need = attr_need(L.instruction.goal);
    int placed = 0;
    for (int gi : L.goal_object_idx) {
        const auto& dyn = objs[gi];
        if (dyn.loc < 0) continue;
        bool in_goal = std::find(L.goal_recep_idx.begin(), L.goal_recep_idx.end(), dyn.loc) !=
                       L.goal_recep_idx.end();
        if (!in_goal) continue;
        if (need == AttrNeed::Clean && !dyn.clean) continue;
        if (need == AttrNeed::Hot && !dyn.hot) continue;
        ++placed;
    }
    return placed >= L.goal_need;
}

std::shared_ptr<const HouseLayout> build_house_layout(const InstanceDescriptor& desc) {
    auto layout = std::make_shared<HouseLayout>();
    layout->desc = desc;
    Rng rng(mix64(desc.instance_seed, hash_str("house-layout")));

    auto add_recep = [&](const std::string& kind, int index) {
        HouseLayout::Recep r;
        r.kind = kind;
        r.index = index;
        r.name = kind + " " + std::to_string(index);
        r.openable = is_openable_kind(kind);
        r.initially_open = r.openable && rng.chance(0.3);
        layout->receps.push_back(r);
    };

    add_recep("countertop", 1);
    add_recep("diningtable", 1);
    add_recep("sinkbasin", 1);
    add_recep("microwave", 1);
    add_recep("fridge", 1);
    int n_drawers = 1 + static_cast<int>(rng.below(2));
    int n_cabinets = static_cast<int>(rng.below(3));
    if (desc.goal != GoalKind::Navigate && desc.receptacle_kind == "cabinet" && n_cabinets == 0) {
        n_cabinets = 1;
    }
    for (int i = 1; i <= n_drawers; ++i) add_recep("drawer", i);
    for (int i = 1; i <= n_cabinets; ++i) add_recep("cabinet", i);
    size_t n_extras = rng.below(3);
    std::vector<std::string> extras = extra_recep_kinds();
    rng.shuffle(extras);
    extras.resize(n_extras);
    std::sort(extras.begin(), extras.end());
    for (const auto& kind : extras) add_recep(kind, 1);
    bool goal_recep_present = false;
    for (const auto& r : layout->receps) goal_recep_present |= r.kind == desc.receptacle_kind;
    if (!goal_recep_present) add_recep(desc.receptacle_kind, 1);

    for (size_t i = 0; i < layout->receps.size(); ++i) {
        const auto& r = layout->receps[i];
        if (r.kind == desc.receptacle_kind) layout->goal_recep_idx.push_back(static_cast<int>(i));
        if (r.kind == "sinkbasin") layout->sink_idx = static_cast<int>(i);
        if (r.kind == "microwave") layout->microwave_idx = static_cast<int>(i);
    }

    layout->goal_need = desc.goal == GoalKind::PutTwo ? 2 : 1;
    const int n_receps = static_cast<int>(layout->receps.size());
    auto in_goal_recep = [&](int loc) {
        return std::find(layout->goal_recep_idx.begin(), layout->goal_recep_idx.end(), loc) !=
               layout->goal_recep_idx.end();
    };

    std::map<std::string, int> next_index;
    auto add_object = [&](const std::string& kind, int loc, bool goal_object) {
        HouseLayout::Obj o;
        o.kind = kind;
        o.index = ++next_index[kind];
        o.name = kind + " " + std::to_string(o.index);
        o.initial_loc = loc;
        o.goal_object = goal_object;
        if (goal_object) layout->goal_object_idx.push_back(static_cast<int>(layout->objects.size()));
        layout->objects.push_back(o);
    };

    for (int g = 0; g < layout->goal_need; ++g) {
        int loc = rng.range(0, n_receps - 1);
        // Goal objects start where the bare placement part of the goal fails,
        // so no instance is satisfied at reset.
        while (attr_need(desc.goal) == AttrNeed::None && in_goal_recep(loc)) {
            loc = rng.range(0, n_receps - 1);
        }
        add_object(desc.object_kind, loc, true);
    }
    const auto& kinds = house_object_kinds();
    for (int d = 0; d < desc.distractors; ++d) {
        std::string kind = kinds[rng.below(kinds.size())];
        while (kind == desc.object_kind) kind = kinds[rng.below(kinds.size())];
        add_object(kind, rng.range(0, n_receps - 1), false);
    }
    if (rng.chance(0.5)) add_object("knife", rng.range(0, n_receps - 1), false);

    layout->instruction.goal = desc.goal;
    layout->instruction.object_kind = desc.object_kind;
    layout->instruction.receptacle_kind = desc.receptacle_kind;
    layout->instruction.text = instruction_text(desc.goal, desc.object_kind, desc.receptacle_kind);
    return layout;
}

// --- Env ---

HouseEnv::HouseEnv(const InstanceDescriptor& desc)
    : layout_(build_house_layout(desc)), planner_(std::make_unique<HousePlanner>(layout_)) {
    if (desc.family == Family::HouseXL) {
        std::vector<std::string> names;
        for (const auto& r : layout_->receps) names.push_back(r.name);
        for (const auto& k : house_object_kinds()) names.push_back(k);
        for (const char* verb : kFillerVerbs) {
            for (const auto& n : names) filler_actions_.push_back(std::string(verb) + " " + n);
        }
        for (const auto& k : house_object_kinds()) {
            for (const auto& r : layout_->receps) {
                filler_actions_.push_back("look at " + k + " under " + r.name);
            }
        }
    }
}

HouseState HouseEnv::reset(uint64_t seed) const {
    HouseState s;
    s.layout = layout_;
    s.agent_loc = -1;
    s.held = -1;
    s.steps = 0;
    s.objs.resize(layout_->objects.size());
    for (size_t i = 0; i < layout_->objects.size(); ++i) {
        s.objs[i].loc = layout_->objects[i].initial_loc;
    }
    Rng rng(mix64(layout_->desc.instance_seed, seed, hash_str("house-episode")));
    s.open_mask = 0;
    for (size_t r = 0; r < layout_->receps.size(); ++r) {
        if (!layout_->receps[r].openable) continue;
        bool open = layout_->receps[r].initially_open;
        if (rng.chance(0.3)) open = !open;  // episode-level variation
        if (open) s.open_mask |= 1u << r;
    }
    return s;
}

Observation HouseEnv::make_obs(const HouseState& s, const std::string& result) const {
    Observation obs;
    obs.family = layout_->desc.family;
    obs.result_text = result;
    obs.success = s.goal_satisfied();
    obs.done = obs.success || s.steps >= layout_->desc.max_steps;
    if (s.agent_loc >= 0) {
        const auto& r = layout_->receps[s.agent_loc];
        SceneReceptacle sr;
        sr.name = r.name;
        sr.openable = r.openable;
        sr.open = s.recep_open(s.agent_loc);
        if (!r.openable || sr.open) {
            for (size_t i = 0; i < s.objs.size(); ++i) {
                if (s.objs[i].loc != s.agent_loc) continue;
                sr.contents.push_back({layout_->objects[i].name, s.objs[i].clean, s.objs[i].hot,
                                       s.objs[i].sliced});
            }
        }
        obs.here.push_back(std::move(sr));
    }
    if (s.held >= 0) {
        obs.inventory.push_back({layout_->objects[s.held].name, s.objs[s.held].clean,
                                 s.objs[s.held].hot, s.objs[s.held].sliced});
    }
    return obs;
}

Observation HouseEnv::observe(const HouseState& s) const { return make_obs(s, ""); }

Observation HouseEnv::initial_observation(const HouseState& s) const {
    std::vector<std::string> names;
    for (const auto& r : layout_->receps) names.push_back("a " + r.name);
    std::sort(names.begin(), names.end());
    return make_obs(s, "You are in the middle of a room. Looking quickly around you, you see " +
                           prose_join(names) + ".");
}

std::vector<Action> HouseEnv::plausible_actions(const HouseState& s) const {
    std::vector<Action> out;
    const auto& L = *layout_;
    for (size_t r = 0; r < L.receps.size(); ++r) {
        if (static_cast<int>(r) != s.agent_loc) out.push_back("go to " + L.receps[r].name);
    }
    if (s.agent_loc >= 0) {
        const auto& here = L.receps[s.agent_loc];
        if (here.openable) {
            out.push_back("open " + here.name);
            out.push_back("close " + here.name);
        }
        bool visible = !here.openable || s.recep_open(s.agent_loc);
        if (visible) {
            for (size_t i = 0; i < s.objs.size(); ++i) {
                if (s.objs[i].loc != s.agent_loc) continue;
                if (s.held < 0) {
                    out.push_back("take " + L.objects[i].name + " from " + here.name);
                }
                if (s.held >= 0 && L.objects[s.held].kind == "knife" &&
                    L.objects[i].kind != "knife") {
                    out.push_back("slice " + L.objects[i].name + " with knife 1");
                }
            }
        }
    }
    if (s.held >= 0) {
        const auto& held_name = L.objects[s.held].name;
        for (const auto& r : L.receps) {
            out.push_back("put " + held_name + " in/on " + r.name);
        }
        out.push_back("clean " + held_name + " with sinkbasin 1");
        out.push_back("heat " + held_name + " with microwave 1");
    }
    out.insert(out.end(), filler_actions_.begin(), filler_actions_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Splits "take soapbar 1 from drawer 2"-style actions around a keyword.
bool split_around(const std::string& action, const std::string& verb, const std::string& kw,
                  std::string& a, std::string& b) {
    if (!starts_with(action, verb)) return false;
    size_t pos = action.find(kw, verb.size());
    if (pos == std::string::npos) return false;
    a = action.substr(verb.size(), pos - verb.size());
    b = action.substr(pos + kw.size());
    return true;
}

}  // namespace

HouseStepResult HouseEnv::step_unchecked(const HouseState& s, const Action& action) const {
    const auto& L = *layout_;
    HouseStepResult res;
    res.state = s;
    HouseState& ns = res.state;
    ns.steps += 1;

    auto find_recep = [&](const std::string& name) {
        for (size_t r = 0; r < L.receps.size(); ++r) {
            if (L.receps[r].name == name) return static_cast<int>(r);
        }
        return -1;
    };
    auto find_obj = [&](const std::string& name) {
        for (size_t i = 0; i < L.objects.size(); ++i) {
            if (L.objects[i].name == name) return static_cast<int>(i);
        }
        return -1;
    };

    std::string result = "Nothing happens.";
    std::string a, b;
    if (starts_with(action, "go to ")) {
        int r = find_recep(action.substr(6));
        if (r >= 0 && r != s.agent_loc) {
            ns.agent_loc = r;
            result = "You arrive at loc " + std::to_string(L.loc_id(r)) + ".";
        }
    } else if (starts_with(action, "open ")) {
        int r = find_recep(action.substr(5));
        if (r == s.agent_loc && r >= 0 && L.receps[r].openable) {
            if (s.recep_open(r)) {
                result = "The " + L.receps[r].name + " is already open.";
            } else {
                ns.open_mask |= 1u << r;
                std::vector<std::string> items;
                for (size_t i = 0; i < ns.objs.size(); ++i) {
                    if (ns.objs[i].loc == r) {
                        items.push_back(verbalizable_item_name(i, ns));
                    }
                }
                result = "You open the " + L.receps[r].name + ". The " + L.receps[r].name +
                         " is open. In it, you see " +
                         (items.empty() ? std::string("nothing") : prose_join(items)) + ".";
            }
        }
    } else if (starts_with(action, "close ")) {
        int r = find_recep(action.substr(6));
        if (r == s.agent_loc && r >= 0 && L.receps[r].openable) {
            if (!s.recep_open(r)) {
                result = "The " + L.receps[r].name + " is already closed.";
            } else {
                ns.open_mask &= ~(1u << r);
                result = "You close the " + L.receps[r].name + ".";
            }
        }
    } else if (split_around(action, "take ", " from ", a, b)) {
        int i = find_obj(a);
        int r = find_recep(b);
        if (i >= 0 && r >= 0 && r == s.agent_loc && s.held < 0 && s.objs[i].loc == r &&
            (!L.receps[r].openable || s.recep_open(r))) {
            ns.held = i;
            ns.objs[i].loc = -1;
            result = "You pick up the " + L.objects[i].name + " from the " + L.receps[r].name + ".";
        }
    } else if (split_around(action, "put ", " in/on ", a, b)) {
        int i = find_obj(a);
        int r = find_recep(b);
        if (i >= 0 && r >= 0 && i == s.held && r == s.agent_loc &&
            (!L.receps[r].openable || s.recep_open(r))) {
            ns.held = -1;
            ns.objs[i].loc = r;
            result = "You put the " + L.objects[i].name + " in/on the " + L.receps[r].name + ".";
        }
    } else if (split_around(action, "clean ", " with ", a, b)) {
        int i = find_obj(a);
        if (i >= 0 && i == s.held && s.agent_loc == L.sink_idx) {
            ns.objs[i].clean = true;
            result = "You clean the " + L.objects[i].name + " using the sinkbasin 1.";
        }
    } else if (split_around(action, "heat ", " with ", a, b)) {
        int i = find_obj(a);
        if (i >= 0 && i == s.held && s.agent_loc == L.microwave_idx) {
            ns.objs[i].hot = true;
            result = "You heat the " + L.objects[i].name + " using the microwave 1.";
        }
    } else if (split_around(action, "slice ", " with ", a, b)) {
        int i = find_obj(a);
        if (i >= 0 && s.held >= 0 && L.objects[s.held].kind == "knife" &&
            s.objs[i].loc == s.agent_loc && s.agent_loc >= 0) {
            ns.objs[i].sliced = true;
            result = "You slice the " + L.objects[i].name + " using the knife 1.";
        }
    }
    // Anything else (house-XL filler verbs) keeps "Nothing happens."

    res.obs = make_obs(ns, result);
    res.success = res.obs.success;
    res.done = res.obs.done;
    return res;
}

std::string HouseEnv::verbalizable_item_name(size_t i, const HouseState& s) const {
    SceneItem it{layout_->objects[i].name, s.objs[i].clean, s.objs[i].hot, s.objs[i].sliced};
    std::string out = "a ";
    if (it.clean) out += "clean ";
    if (it.hot) out += "hot ";
    if (it.sliced) out += "sliced ";
    out += it.name;
    return out;
}

HouseStepResult HouseEnv::step(const HouseState& s, const Action& action) const {
    auto plausible = plausible_actions(s);
    if (!std::binary_search(plausible.begin(), plausible.end(), action)) {
        fail(ErrorKind::Env, "invalid action for current state: '" + action + "'");
    }
    return step_unchecked(s, action);
}

Action HouseEnv::expert_next_action(const HouseState& s) const {
    int c = planner_->remaining_cost(s);
    if (c == 0) fail(ErrorKind::Env, "expert queried on a goal-satisfying state");
    for (const auto& action : plausible_actions(s)) {
        HouseStepResult r = step_unchecked(s, action);
        if (planner_->remaining_cost(r.state) == c - 1) return action;
    }
    fail(ErrorKind::Env, "no cost-decreasing action found (planner inconsistency)");
}

int HouseEnv::remaining_cost(const HouseState& s) const { return planner_->remaining_cost(s); }

// --- Planner ---

HousePlanner::HousePlanner(std::shared_ptr<const HouseLayout> layout)
    : layout_(std::move(layout)) {}

namespace {

// Compact goal-relevant projection of a house state. Non-goal objects are
// reduced to the single fact "is the agent's hand occupied by one of them".
struct Proj {
    int8_t agent;              // -1 middle, else receptacle index
    int8_t held;               // -1 none, 0..1 goal object ordinal, 2 other
    std::array<int8_t, 2> loc; // goal object receptacle, -1 while held
    std::array<uint8_t, 2> bit;
    uint8_t mask;              // open flags over openable receptacles, in order

    uint64_t key() const {
        uint64_t k = 0;
        k = k * 16 + static_cast<uint64_t>(agent + 1);
        k = k * 4 + static_cast<uint64_t>(held + 1);
        for (int i = 0; i < 2; ++i) {
            k = k * 16 + static_cast<uint64_t>(loc[i] + 1);
            k = k * 2 + bit[i];
        }
        k = k * 256 + mask;
        return k;
    }
};

struct ProjWorld {
    const HouseLayout* L;
    AttrNeed need;
    std::vector<int> openables;        // receptacle indices with doors
    std::vector<int> openable_ordinal; // recep index -> position in mask, or -1
    int n_goal;

    explicit ProjWorld(const HouseLayout& layout) : L(&layout) {
        need = attr_need(layout.instruction.goal);
        openable_ordinal.assign(layout.receps.size(), -1);
        for (size_t r = 0; r < layout.receps.size(); ++r) {
            if (layout.receps[r].openable) {
                openable_ordinal[r] = static_cast<int>(openables.size());
                openables.push_back(static_cast<int>(r));
            }
        }
        n_goal = static_cast<int>(layout.goal_object_idx.size());
    }

    bool open(const Proj& p, int r) const {
        int o = openable_ordinal[r];
        return o < 0 || ((p.mask >> o) & 1u);
    }

    bool accepts(const Proj& p, int r) const { return open(p, r); }

    bool is_goal(const Proj& p) const {
        int placed = 0;
        for (int i = 0; i < n_goal; ++i) {
            if (p.loc[i] < 0) continue;
            bool in_goal = std::find(L->goal_recep_idx.begin(), L->goal_recep_idx.end(),
                                     static_cast<int>(p.loc[i])) != L->goal_recep_idx.end();
            if (in_goal && (need == AttrNeed::None || p.bit[i])) ++placed;
        }
        return placed >= L->goal_need;
    }

    template <typename Fn>
    void successors(const Proj& p, Fn&& emit) const {
        const int R = static_cast<int>(L->receps.size());
        for (int r = 0; r < R; ++r) {
            if (r == p.agent) continue;
            Proj q = p;
            q.agent = static_cast<int8_t>(r);
            emit(q);
        }
        if (p.agent >= 0) {
            int o = openable_ordinal[p.agent];
            if (o >= 0) {
                Proj q = p;
                q.mask ^= static_cast<uint8_t>(1u << o);
                emit(q);
            }
            if (p.held < 0) {
                for (int i = 0; i < n_goal; ++i) {
                    if (p.loc[i] == p.agent && open(p, p.agent)) {
                        Proj q = p;
                        q.held = static_cast<int8_t>(i);
                        q.loc[i] = -1;
                        emit(q);
                    }
                }
                // Picking up a non-goal object. Availability is
                // over-approximated; such detours are never on shortest plans,
                // so costs stay exact while suboptimal rollout states remain
                // covered by the table.
                Proj q = p;
                q.held = 2;
                emit(q);
            } else if (p.held == 2) {
                if (accepts(p, p.agent)) {
                    Proj q = p;
                    q.held = -1;
                    emit(q);
                }
            } else {
                int i = p.held;
                if (accepts(p, p.agent)) {
                    Proj q = p;
                    q.held = -1;
                    q.loc[i] = static_cast<int8_t>(p.agent);
                    emit(q);
                }
                if (need == AttrNeed::Clean && p.agent == L->sink_idx && !p.bit[i]) {
                    Proj q = p;
                    q.bit[i] = 1;
                    emit(q);
                }
                if (need == AttrNeed::Hot && p.agent == L->microwave_idx && !p.bit[i]) {
                    Proj q = p;
                    q.bit[i] = 1;
                    emit(q);
                }
            }
        }
    }
};

}  // namespace

uint64_t HousePlanner::encode(const HouseState& s) const {
    const auto& L = *layout_;
    AttrNeed need = attr_need(L.instruction.goal);
    Proj p;
    p.agent = static_cast<int8_t>(s.agent_loc);
    p.held = -1;
    if (s.held >= 0) {
        p.held = 2;
        for (size_t i = 0; i < L.goal_object_idx.size(); ++i) {
            if (L.goal_object_idx[i] == s.held) p.held = static_cast<int8_t>(i);
        }
    }
    p.loc = {-1, -1};
    p.bit = {0, 0};
    for (size_t i = 0; i < L.goal_object_idx.size(); ++i) {
        const auto& dyn = s.objs[L.goal_object_idx[i]];
        p.loc[i] = static_cast<int8_t>(dyn.loc);
        if (need == AttrNeed::Clean) p.bit[i] = dyn.clean ? 1 : 0;
        if (need == AttrNeed::Hot) p.bit[i] = dyn.hot ? 1 : 0;
    }
    p.mask = 0;
    ProjWorld world(L);
    for (size_t o = 0; o < world.openables.size(); ++o) {
        if (s.recep_open(world.openables[o])) p.mask |= static_cast<uint8_t>(1u << o);
    }
    return p.key();
}

void HousePlanner::build() const {
    const auto& L = *layout_;
    ProjWorld world(L);

    Proj root;
    root.agent = -1;
    root.held = -1;
    root.loc = {-1, -1};
    root.bit = {0, 0};
    for (size_t i = 0; i < L.goal_object_idx.size(); ++i) {
        root.loc[i] = static_cast<int8_t>(L.objects[L.goal_object_idx[i]].initial_loc);
    }
    root.mask = 0;
    for (size_t o = 0; o < world.openables.size(); ++o) {
        if (L.receps[world.openables[o]].initially_open) root.mask |= static_cast<uint8_t>(1u << o);
    }

    // Flood the reachable projected graph.
    std::unordered_map<uint64_t, uint32_t> id_of;
    std::vector<Proj> nodes;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    id_of.reserve(1 << 16);
    nodes.push_back(root);
    id_of[root.key()] = 0;
    for (uint32_t u = 0; u < nodes.size(); ++u) {
        Proj cur = nodes[u];
        world.successors(cur, [&](const Proj& q) {
            uint64_t k = q.key();
            auto [it, inserted] = id_of.emplace(k, static_cast<uint32_t>(nodes.size()));
            if (inserted) nodes.push_back(q);
            if (it->second != u) edges.emplace_back(u, it->second);
        });
    }

    // Reverse BFS from the goal set gives the exact cost-to-goal everywhere.
    std::vector<std::vector<uint32_t>> rev(nodes.size());
    for (auto [u, v] : edges) rev[v].push_back(u);
    std::vector<int32_t> dist(nodes.size(), -1);
    std::deque<uint32_t> queue;
    for (uint32_t i = 0; i < nodes.size(); ++i) {
        if (world.is_goal(nodes[i])) {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t u : rev[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }

    cost_.reserve(nodes.size());
    for (const auto& [key, id] : id_of) {
        cost_[key] = dist[id];
    }
    built_ = true;
}

int HousePlanner::remaining_cost(const HouseState& s) const {
    if (!built_) build();
    auto it = cost_.find(encode(s));
    if (it == cost_.end()) {
        fail(ErrorKind::Env, "state outside the reachable set (planner)");
    }
    if (it->second < 0) fail(ErrorKind::Env, "goal unreachable from state");
    return it->second;
}

}  // namespace lfmlab::env
