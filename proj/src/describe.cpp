#include "dualnav/describe.hpp"

#include <algorithm>
#include <set>

namespace dualnav {

std::string render_fact(const SceneFact& f) {
  return "A " + surface_class_name(f.cls) + " is on the " + zone_name(f.zone) + " side (" +
         band_name(f.band) + ").";
}

std::string render_sign(const SceneSign& s) {
  return "Text '" + s.text + "' on " + s.where + " cam.";
}

std::string SceneDescriptor::joined_text() const {
  std::string out;
  for (const auto& line : description) {
    if (!out.empty()) out += ' ';
    out += line;
  }
  return out;
}

SceneDescriptor describe(const std::vector<SegmentMask>& masks,
                         const std::vector<CameraSign>& signs, const ZonePartition& part) {
  SceneDescriptor desc;

  std::set<SceneFact> facts;
  for (const auto& mask : masks) {
    for (const auto& cell : mask.cells) {
      facts.insert({mask.cls, part.zone(cell), part.band(cell)});
    }
  }
  desc.facts.assign(facts.begin(), facts.end());

  std::set<SceneSign> sign_set;
  for (const auto& cs : signs) {
    SceneSign s;
    s.text = cs.detection.text;
    s.where = cs.camera == CameraId::kFront ? zone_name(part.zone(cs.detection.cell))
                                            : camera_name(cs.camera);
    sign_set.insert(s);
  }
  desc.signs.assign(sign_set.begin(), sign_set.end());

  for (const auto& f : desc.facts) desc.description.push_back(render_fact(f));
  for (const auto& s : desc.signs) desc.description.push_back(render_sign(s));
  return desc;
}

}  // namespace dualnav
