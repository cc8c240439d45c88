#pragma once

#include <string>
#include <vector>

#include "dualnav/perception.hpp"
#include "dualnav/zones.hpp"

namespace dualnav {

// One structured spatial fact: "there is {class} in {zone}, {band}".
struct SceneFact {
  SurfaceClass cls;
  Zone zone;
  Band band;

  friend bool operator==(const SceneFact& a, const SceneFact& b) {
    return a.cls == b.cls && a.zone == b.zone && a.band == b.band;
  }
  friend bool operator<(const SceneFact& a, const SceneFact& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.zone != b.zone) return a.zone < b.zone;
    return a.band < b.band;
  }
};

struct SceneSign {
  std::string text;
  std::string where;  // zone name for the front camera, camera name otherwise

  friend bool operator<(const SceneSign& a, const SceneSign& b) {
    if (a.where != b.where) return a.where < b.where;
    return a.text < b.text;
  }
};

// The textual bridge between perception and both matching and reasoning.
// `description` is exactly the rendered templates of facts then signs,
// bit-identical on re-render.
struct SceneDescriptor {
  std::vector<SceneFact> facts;   // sorted by (class, zone, band)
  std::vector<SceneSign> signs;   // sorted by (where, text)
  std::vector<std::string> description;

  std::string joined_text() const;  // lines joined with single spaces
};

// Fixed rendering templates; matching and prompts depend on these strings.
std::string render_fact(const SceneFact& f);
std::string render_sign(const SceneSign& s);

// Conservative tagging: a (class, zone, band) fact is emitted whenever a
// mask overlaps that zone/band cell set in at least one cell. The bias
// over-reports structure so ambiguous scenes reliably escalate rather
// than being missed.
SceneDescriptor describe(const std::vector<SegmentMask>& masks,
                         const std::vector<CameraSign>& signs, const ZonePartition& part);

}  // namespace dualnav
