#include "dualnav/world_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {

using nlohmann::json;

json vec(const Vec2& v) { return json{v.x, v.y}; }
Vec2 to_vec(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json pose(const Pose& p) { return json{{"x", p.x}, {"y", p.y}, {"yaw", p.yaw}}; }
Pose to_pose(const json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("yaw").get<double>()};
}

}  // namespace

std::string world_to_json_text(const WorldModel& w) {
  json j;
  j["schema"] = "world/1";
  j["preset"] = w.preset;
  j["seed"] = w.seed;
  for (const auto& c : w.corridors) {
    j["corridors"].push_back(json{{"a", vec(c.a)}, {"b", vec(c.b)}, {"width", c.width}});
  }
  j["doors"] = json::array();
  for (const auto& d : w.doors) {
    j["doors"].push_back(json{{"pos", vec(d.pos)},
                              {"width", d.width},
                              {"height", d.height},
                              {"facing", d.facing},
                              {"room_id", d.room_id}});
  }
  j["signs"] = json::array();
  for (const auto& s : w.signs) {
    j["signs"].push_back(json{{"text", s.text},
                              {"pos", vec(s.pos)},
                              {"facing", s.facing},
                              {"z0", s.z0},
                              {"z1", s.z1},
                              {"half_width", s.half_width}});
  }
  j["rooms"] = json::array();
  for (const auto& r : w.rooms) {
    j["rooms"].push_back(json{{"id", r.id},
                              {"label", r.label},
                              {"door_index", r.door_index},
                              {"doorway", pose(r.doorway)}});
  }
  j["obstacles"] = json::array();
  for (const auto& o : w.obstacles) {
    j["obstacles"].push_back(json{{"pos", vec(o.pos)},
                                  {"radius", o.radius},
                                  {"height", o.height},
                                  {"person", o.person},
                                  {"dynamic", o.dynamic},
                                  {"t0_s", o.t0_s},
                                  {"t1_s", o.t1_s},
                                  {"vel", vec(o.vel)}});
  }
  j["nodes"] = json::array();
  for (const auto& n : w.nodes) j["nodes"].push_back(vec(n));
  j["edges"] = json::array();
  for (const auto& e : w.edges) j["edges"].push_back(json{e.first, e.second});
  j["start"] = pose(w.start);
  j["destination_room_ids"] = w.destination_room_ids;
  return j.dump(2);
}

WorldModel world_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("world JSON: ") + e.what());
  }
  if (j.value("schema", "") != "world/1") {
    throw ParseError("world JSON: unsupported schema");
  }
  WorldModel w;
  w.preset = j.value("preset", "custom");
  w.seed = j.value("seed", 0ull);
  for (const auto& c : j.value("corridors", json::array())) {
    w.corridors.push_back({to_vec(c.at("a")), to_vec(c.at("b")), c.value("width", 2.0)});
  }
  for (const auto& d : j.value("doors", json::array())) {
    Door door;
    door.pos = to_vec(d.at("pos"));
    door.width = d.value("width", 0.9);
    door.height = d.value("height", 2.1);
    door.facing = d.value("facing", 0.0);
    door.room_id = d.value("room_id", -1);
    w.doors.push_back(door);
  }
  for (const auto& s : j.value("signs", json::array())) {
    Sign sign;
    sign.text = s.at("text").get<std::string>();
    sign.pos = to_vec(s.at("pos"));
    sign.facing = s.value("facing", 0.0);
    sign.z0 = s.value("z0", 1.2);
    sign.z1 = s.value("z1", 1.7);
    sign.half_width = s.value("half_width", 0.25);
    w.signs.push_back(sign);
  }
  for (const auto& r : j.value("rooms", json::array())) {
    Room room;
    room.id = r.at("id").get<int>();
    room.label = r.at("label").get<std::string>();
    room.door_index = r.value("door_index", -1);
    room.doorway = to_pose(r.at("doorway"));
    w.rooms.push_back(room);
  }
  for (const auto& o : j.value("obstacles", json::array())) {
    Obstacle obs;
    obs.pos = to_vec(o.at("pos"));
    obs.radius = o.value("radius", 0.3);
    obs.height = o.value("height", 1.0);
    obs.person = o.value("person", false);
    obs.dynamic = o.value("dynamic", false);
    obs.t0_s = o.value("t0_s", 0.0);
    obs.t1_s = o.value("t1_s", 0.0);
    obs.vel = o.contains("vel") ? to_vec(o.at("vel")) : Vec2{0, 0};
    w.obstacles.push_back(obs);
  }
  for (const auto& n : j.value("nodes", json::array())) w.nodes.push_back(to_vec(n));
  for (const auto& e : j.value("edges", json::array())) {
    w.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  w.start = to_pose(j.at("start"));
  w.destination_room_ids = j.value("destination_room_ids", std::vector<int>{});
  w.check();
  return w;
}

void save_world_file(const WorldModel& world, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write world file: " + path);
  out << world_to_json_text(world) << "\n";
}

WorldModel load_world_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open world file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return world_from_json_text(ss.str());
}

}  // namespace dualnav
