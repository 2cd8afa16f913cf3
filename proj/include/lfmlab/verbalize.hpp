#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lfmlab/env/types.hpp"

namespace lfmlab::verbal {

// The eight egocentric sectors, 45 degrees each. Boundaries sit at
// 22.5 + 45k degrees; a boundary value belongs to the sector that follows it
// clockwise (337.5 -> straight ahead, 22.5 -> slightly to your right).
enum class Sector {
    Ahead = 0,
    SlightRight,
    Right,
    BehindRight,
    Behind,
    BehindLeft,
    Left,
    SlightLeft,
};

inline constexpr std::array<const char*, 8> kSectorLabels = {
    "straight ahead",
    "slightly to your right",
    "to your right",
    "behind you, slightly to your right",
    "behind you",
    "behind you, slightly to your left",
    "to your left",
    "slightly to your left",
};

// Rendering order of sectors in scene descriptions, starting from behind.
inline constexpr std::array<Sector, 8> kSectorRenderOrder = {
    Sector::Behind,     Sector::BehindLeft, Sector::Left,  Sector::SlightLeft,
    Sector::Ahead,      Sector::SlightRight, Sector::Right, Sector::BehindRight,
};

const char* sector_label(Sector s);

// Maps an absolute bearing to an egocentric sector given the agent heading.
// Inputs may be any finite degrees; they are normalized to [0, 360).
Sector sector_of(double agent_heading, double bearing);

// Egocentric scene description: one line per non-empty sector, in
// kSectorRenderOrder, formatted "<Sector>, you see <p1>, <p2>, ...".
// Empty landmark list renders as the empty string.
std::string render_egocentric(const std::vector<std::pair<std::string, double>>& landmarks,
                              double agent_heading);

// House observation -> text: result sentence, visible receptacles with
// contents, then inventory, space-joined into one line.
std::string verbalize_house(const env::Observation& obs);

// Street observation -> text: result sentence, egocentric landmark lines,
// then the available directions line.
std::string verbalize_street(const env::Observation& obs);

// Family dispatch.
std::string verbalize(const env::Observation& obs);

// Renders one scene item with its attribute adjectives ("a clean soapbar 1").
std::string item_phrase(const env::SceneItem& item);

// --- Alignment tables (precomputed landmark/noun-phrase matches) ---

struct AlignmentEntry {
    std::string landmark_id;
    std::string noun_phrase;
    double similarity = 0.0;
};

struct AlignmentTable {
    // One retained entry per landmark id: the maximum-similarity candidate,
    // kept only when its similarity exceeds 0.2.
    std::vector<AlignmentEntry> entries;  // sorted by landmark id

    const AlignmentEntry* find(const std::string& landmark_id) const;
};

inline constexpr double kAlignmentThreshold = 0.2;

// Reads JSONL rows {landmark_id, noun_phrase, similarity}. Malformed rows and
// out-of-range similarities raise Error with the offending line number.
AlignmentTable ingest_alignments(const std::string& path);

}  // namespace lfmlab::verbal
