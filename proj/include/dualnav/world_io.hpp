#pragma once

#include <string>

#include "dualnav/world.hpp"

namespace dualnav {

// "world/1" JSON schema round-trip.
std::string world_to_json_text(const WorldModel& world);
WorldModel world_from_json_text(const std::string& text);

void save_world_file(const WorldModel& world, const std::string& path);
WorldModel load_world_file(const std::string& path);

}  // namespace dualnav
