#include "lfmlab/env/street.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "lfmlab/util.hpp"
#include "lfmlab/verbalize.hpp"

namespace lfmlab::env {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinAngularSeparation = 50.0;
constexpr int kMaxDegree = 4;

double compass_bearing(double dx, double dy) {
    // 0 = north (+y), clockwise, in [0, 360).
    double deg = std::atan2(dx, dy) * 180.0 / kPi;
    if (deg < 0) deg += 360.0;
    return deg;
}

double angular_gap(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 360.0 - d);
}

std::string with_article(const std::string& base) {
    static const std::string vowels = "aeiou";
    if (!base.empty() && vowels.find(base[0]) != std::string::npos) return "an " + base;
    return "a " + base;
}

// One deterministic attempt at building the layout. Returns nullptr when the
// sampled geometry violates the constraints.
std::shared_ptr<StreetLayout> try_build(const InstanceDescriptor& desc, uint64_t attempt_seed) {
    auto layout = std::make_shared<StreetLayout>();
    layout->desc = desc;
    Rng rng(attempt_seed);

    const int n = std::max(8, desc.nodes);
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    layout->nodes.resize(n);
    for (int i = 0; i < n; ++i) {
        double gx = static_cast<double>(i % cols) * 100.0;
        double gy = static_cast<double>(i / cols) * 100.0;
        layout->nodes[i].x = gx + rng.uniform() * 60.0 - 30.0;
        layout->nodes[i].y = gy + rng.uniform() * 60.0 - 30.0;
    }

    auto bearing = [&](int from, int to) {
        return compass_bearing(layout->nodes[to].x - layout->nodes[from].x,
                               layout->nodes[to].y - layout->nodes[from].y);
    };
    auto can_add = [&](int u, int v) {
        if (u == v) return false;
        const auto& eu = layout->nodes[u].edges;
        const auto& ev = layout->nodes[v].edges;
        if (static_cast<int>(eu.size()) >= kMaxDegree || static_cast<int>(ev.size()) >= kMaxDegree)
            return false;
        for (const auto& e : eu) {
            if (e.to == v) return false;
            if (angular_gap(e.bearing, bearing(u, v)) < kMinAngularSeparation) return false;
        }
        for (const auto& e : ev) {
            if (angular_gap(e.bearing, bearing(v, u)) < kMinAngularSeparation) return false;
        }
        return true;
    };
    auto add_edge = [&](int u, int v) {
        layout->nodes[u].edges.push_back({v, bearing(u, v)});
        layout->nodes[v].edges.push_back({u, bearing(v, u)});
    };

    // Candidate edges by increasing length, greedily added under the
    // degree / angular-separation constraints.
    struct Cand {
        double d2;
        int u, v;
    };
    std::vector<Cand> cands;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double dx = layout->nodes[u].x - layout->nodes[v].x;
            double dy = layout->nodes[u].y - layout->nodes[v].y;
            double d2 = dx * dx + dy * dy;
            if (d2 < 210.0 * 210.0) cands.push_back({d2, u, v});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.d2 != b.d2) return a.d2 < b.d2;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    for (const auto& c : cands) {
        if (can_add(c.u, c.v)) add_edge(c.u, c.v);
    }

    // Connectivity check.
    std::vector<int> comp(n, -1);
    std::deque<int> queue;
    comp[0] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& e : layout->nodes[u].edges) {
            if (comp[e.to] < 0) {
                comp[e.to] = 0;
                queue.push_back(e.to);
            }
        }
    }
    if (std::count(comp.begin(), comp.end(), 0) != n) return nullptr;
    for (auto& node : layout->nodes) {
        if (node.edges.empty()) return nullptr;
        std::sort(node.edges.begin(), node.edges.end(),
                  [](const StreetLayout::Edge& a, const StreetLayout::Edge& b) {
                      return a.bearing < b.bearing;
                  });
    }

    // Landmarks. Training instances draw from the head of the phrase pool;
    // test instances must include tail phrases never seen in training.
    const auto& pool = street_landmark_phrases();
    const size_t train_hi = pool.size() - 6;
    bool test_split = desc.split == "test";
    for (auto& node : layout->nodes) {
        int k = 2 + static_cast<int>(rng.below(2));
        for (int j = 0; j < k; ++j) {
            size_t pick = test_split ? rng.below(pool.size())
                                     : rng.below(train_hi);
            Landmark lm;
            lm.phrase = with_article(pool[pick]);
            lm.bearing = rng.uniform() * 360.0;
            node.landmarks.push_back(lm);
        }
    }
    if (test_split) {
        // Force at least one held-out phrase on the route's start node.
        layout->nodes[0].landmarks[0].phrase =
            with_article(pool[train_hi + rng.below(pool.size() - train_hi)]);
    }

    // Route selection: a start and a target at BFS distance in
    // [route_min, route_max].
    int start = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    std::vector<int> dist(n, -1);
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& e : layout->nodes[u].edges) {
            if (dist[e.to] < 0) {
                dist[e.to] = dist[u] + 1;
                queue.push_back(e.to);
            }
        }
    }
    std::vector<int> targets;
    for (int v = 0; v < n; ++v) {
        if (dist[v] >= desc.route_min && dist[v] <= desc.route_max) targets.push_back(v);
    }
    if (targets.empty()) return nullptr;
    int target = targets[rng.below(targets.size())];
    layout->start = start;
    layout->target = target;

    // Exact distances to the target for the oracle.
    layout->dist_to_target.assign(n, -1);
    layout->dist_to_target[target] = 0;
    queue.push_back(target);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& e : layout->nodes[u].edges) {
            if (layout->dist_to_target[e.to] < 0) {
                layout->dist_to_target[e.to] = layout->dist_to_target[u] + 1;
                queue.push_back(e.to);
            }
        }
    }

    // Shortest path (lowest node index on ties) for the instruction text.
    std::vector<int> path{start};
    int cur = start;
    while (cur != target) {
        int best = -1;
        for (const auto& e : layout->nodes[cur].edges) {
            if (layout->dist_to_target[e.to] == layout->dist_to_target[cur] - 1 &&
                (best < 0 || e.to < best)) {
                best = e.to;
            }
        }
        path.push_back(best);
        cur = best;
    }
    auto node_phrase = [&](int v) {
        const std::string& p = layout->nodes[v].landmarks.front().phrase;
        // "a white van" -> "the white van"
        size_t sp = p.find(' ');
        return "the " + p.substr(sp + 1);
    };
    std::vector<std::string> clauses;
    clauses.push_back("Head toward " + node_phrase(path[1]) + ".");
    double heading = 0.0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        double b = 0.0;
        for (const auto& e : layout->nodes[path[i]].edges) {
            if (e.to == path[i + 1]) b = e.bearing;
        }
        if (i > 0) {
            verbal::Sector s = verbal::sector_of(heading, b);
            if (s != verbal::Sector::Ahead && clauses.size() < 5) {
                clauses.push_back("At " + node_phrase(path[i]) + ", go " +
                                  verbal::sector_label(s) + ".");
            }
        }
        heading = b;
    }
    clauses.push_back("Stop at " + node_phrase(target) + ".");

    layout->instruction.goal = GoalKind::Navigate;
    layout->instruction.target_node = target;
    layout->instruction.text = join(clauses, " ");
    return layout;
}

}  // namespace

std::shared_ptr<const StreetLayout> build_street_layout(const InstanceDescriptor& desc) {
    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        auto layout = try_build(desc, mix64(desc.instance_seed, hash_str("street-layout"), attempt));
        if (layout) return layout;
    }
    fail(ErrorKind::Env, "street instance generation failed: " + desc.id);
}

StreetEnv::StreetEnv(const InstanceDescriptor& desc) : layout_(build_street_layout(desc)) {}

StreetState StreetEnv::reset(uint64_t seed) const {
    StreetState s;
    s.layout = layout_;
    s.node = layout_->start;
    s.steps = 0;
    Rng rng(mix64(layout_->desc.instance_seed, seed, hash_str("street-episode")));
    const auto& edges = layout_->nodes[s.node].edges;
    s.heading = edges[rng.below(edges.size())].bearing;
    return s;
}

Observation StreetEnv::make_obs(const StreetState& s, const std::string& result) const {
    Observation obs;
    obs.family = Family::Street;
    obs.result_text = result;
    obs.heading = s.heading;
    obs.success = s.node == layout_->target;
    obs.done = obs.success || s.steps >= layout_->desc.max_steps;
    const auto& node = layout_->nodes[s.node];
    obs.landmarks = node.landmarks;
    for (const auto& e : node.edges) obs.edge_bearings.push_back(e.bearing);
    return obs;
}

Observation StreetEnv::observe(const StreetState& s) const { return make_obs(s, ""); }

Observation StreetEnv::initial_observation(const StreetState& s) const {
    return make_obs(s, "You are standing on the street.");
}

std::vector<Action> StreetEnv::plausible_actions(const StreetState& s) const {
    std::vector<Action> out;
    for (const auto& e : layout_->nodes[s.node].edges) {
        out.push_back(verbal::sector_label(verbal::sector_of(s.heading, e.bearing)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StreetStepResult StreetEnv::step(const StreetState& s, const Action& action) const {
    const StreetLayout::Edge* chosen = nullptr;
    for (const auto& e : layout_->nodes[s.node].edges) {
        if (verbal::sector_label(verbal::sector_of(s.heading, e.bearing)) == action) {
            chosen = &e;
            break;
        }
    }
    if (!chosen) fail(ErrorKind::Env, "invalid action for current state: '" + action + "'");
    StreetStepResult res;
    res.state = s;
    res.state.node = chosen->to;
    res.state.heading = chosen->bearing;
    res.state.steps += 1;
    std::string result = "You walk " + action + ".";
    if (res.state.node == layout_->target) result += " You have arrived at your destination.";
    res.obs = make_obs(res.state, result);
    res.success = res.obs.success;
    res.done = res.obs.done;
    return res;
}

Action StreetEnv::expert_next_action(const StreetState& s) const {
    int d = layout_->dist_to_target[s.node];
    if (d == 0) fail(ErrorKind::Env, "expert queried at the target node");
    std::vector<Action> best;
    for (const auto& e : layout_->nodes[s.node].edges) {
        if (layout_->dist_to_target[e.to] == d - 1) {
            best.push_back(verbal::sector_label(verbal::sector_of(s.heading, e.bearing)));
        }
    }
    if (best.empty()) fail(ErrorKind::Env, "no progress edge found (street planner)");
    return *std::min_element(best.begin(), best.end());
}

int StreetEnv::remaining_cost(const StreetState& s) const {
    int d = layout_->dist_to_target[s.node];
    if (d < 0) fail(ErrorKind::Env, "target unreachable from node");
    return d;
}

}  // namespace lfmlab::env
