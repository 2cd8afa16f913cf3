#include "lfmlab/verbalize.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "lfmlab/util.hpp"

namespace lfmlab::verbal {

using nlohmann::json;

const char* sector_label(Sector s) { return kSectorLabels[static_cast<size_t>(s)]; }

namespace {

double normalize_degrees(double d) {
    double r = std::fmod(d, 360.0);
    if (r < 0) r += 360.0;
    return r;
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

}  // namespace

Sector sector_of(double agent_heading, double bearing) {
    double rel = normalize_degrees(normalize_degrees(bearing) - normalize_degrees(agent_heading));
    // Shift so that the "straight ahead" sector [337.5, 22.5) starts at 0.
    double shifted = normalize_degrees(rel + 22.5);
    int idx = static_cast<int>(shifted / 45.0);
    if (idx > 7) idx = 7;  // guards the rel == 360-epsilon rounding edge
    return static_cast<Sector>(idx);
}

std::string render_egocentric(const std::vector<std::pair<std::string, double>>& landmarks,
                              double agent_heading) {
    std::array<std::vector<std::string>, 8> by_sector;
    for (const auto& [phrase, bearing] : landmarks) {
        by_sector[static_cast<size_t>(sector_of(agent_heading, bearing))].push_back(phrase);
    }
    std::vector<std::string> lines;
    for (Sector s : kSectorRenderOrder) {
        const auto& phrases = by_sector[static_cast<size_t>(s)];
        if (phrases.empty()) continue;
        lines.push_back(capitalize(std::string(sector_label(s))) + ", you see " +
                        join(phrases, ", "));
    }
    return join(lines, "\n");
}

std::string item_phrase(const env::SceneItem& item) {
    std::string out = "a ";
    if (item.clean) out += "clean ";
    if (item.hot) out += "hot ";
    if (item.sliced) out += "sliced ";
    out += item.name;
    return out;
}

namespace {

std::string receptacle_sentence(const env::SceneReceptacle& r) {
    auto contents = [&r] {
        std::vector<std::string> items;
        items.reserve(r.contents.size());
        for (const auto& it : r.contents) items.push_back(item_phrase(it));
        return items.empty() ? std::string("nothing") : prose_join(items);
    };
    if (!r.openable) {
        return "On the " + r.name + ", you see " + contents() + ".";
    }
    if (!r.open) {
        return "The " + r.name + " is closed.";
    }
    return "The " + r.name + " is open. In it, you see " + contents() + ".";
}

}  // namespace

std::string verbalize_house(const env::Observation& obs) {
    std::vector<std::string> parts;
    if (!obs.result_text.empty()) parts.push_back(obs.result_text);
    for (const auto& r : obs.here) parts.push_back(receptacle_sentence(r));
    if (obs.inventory.empty()) {
        parts.push_back("You are not carrying anything.");
    } else {
        std::vector<std::string> items;
        for (const auto& it : obs.inventory) items.push_back(item_phrase(it));
        parts.push_back("You are carrying: " + prose_join(items) + ".");
    }
    return join(parts, " ");
}

std::string verbalize_street(const env::Observation& obs) {
    std::vector<std::string> parts;
    if (!obs.result_text.empty()) parts.push_back(obs.result_text);
    std::vector<std::pair<std::string, double>> lms;
    lms.reserve(obs.landmarks.size());
    for (const auto& lm : obs.landmarks) lms.emplace_back(lm.phrase, lm.bearing);
    std::string scene = render_egocentric(lms, obs.heading);
    if (!scene.empty()) parts.push_back(scene);
    if (!obs.edge_bearings.empty()) {
        std::array<bool, 8> present{};
        for (double b : obs.edge_bearings) {
            present[static_cast<size_t>(sector_of(obs.heading, b))] = true;
        }
        std::vector<std::string> labels;
        for (Sector s : kSectorRenderOrder) {
            if (present[static_cast<size_t>(s)]) labels.push_back(sector_label(s));
        }
        parts.push_back("You can go: " + join(labels, "; ") + ".");
    }
    return join(parts, "\n");
}

std::string verbalize(const env::Observation& obs) {
    return obs.family == env::Family::Street ? verbalize_street(obs) : verbalize_house(obs);
}

const AlignmentEntry* AlignmentTable::find(const std::string& landmark_id) const {
    for (const auto& e : entries) {
        if (e.landmark_id == landmark_id) return &e;
    }
    return nullptr;
}

AlignmentTable ingest_alignments(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open alignment file: " + path);
    std::map<std::string, AlignmentEntry> best;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json row = json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_object() || !row.contains("landmark_id") ||
            !row.contains("noun_phrase") || !row.contains("similarity") ||
            !row["landmark_id"].is_string() || !row["noun_phrase"].is_string() ||
            !row["similarity"].is_number()) {
            fail(ErrorKind::Parse,
                 "malformed alignment row at line " + std::to_string(lineno) + " in " + path);
        }
        AlignmentEntry e;
        e.landmark_id = row["landmark_id"].get<std::string>();
        e.noun_phrase = row["noun_phrase"].get<std::string>();
        e.similarity = row["similarity"].get<double>();
        if (e.similarity < -1.0 || e.similarity > 1.0) {
            fail(ErrorKind::Data, "similarity out of [-1, 1] at line " + std::to_string(lineno) +
                                      " in " + path);
        }
        auto it = best.find(e.landmark_id);
        if (it == best.end() || e.similarity > it->second.similarity) {
            best[e.landmark_id] = e;
        }
    }
    AlignmentTable table;
    for (auto& [id, entry] : best) {
        if (entry.similarity > kAlignmentThreshold) table.entries.push_back(entry);
    }
    return table;
}

}  // namespace lfmlab::verbal
