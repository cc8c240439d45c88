#pragma once

#include <cstdint>
#include <string>

#include "dualnav/world.hpp"

namespace dualnav {

// Parameterized single-floor layout generator. Presets fix the topology
// family and feature knobs (sign density, distractor texts, sign height);
// "random" samples the knobs too. Same (preset, seed) => identical world.
WorldModel generate_world(const std::string& preset, std::uint64_t seed);

// Number of designated destinations a preset carries (university presets 3,
// office 2, residential 1, random 2).
int preset_destination_count(const std::string& preset);

// Fixed hand-built layouts used throughout the test suites.
//   "straight"            12 m hallway, goal room 306 near the far end
//   "l_junction"          8 m leg, left turn, 8 m leg
//   "t_junction"          8 m leg into a T with two branches
//   "two_junction_16p5"   16.5 m route: left turn then right turn
WorldModel canonical_world(const std::string& name);

// Adds a scripted pedestrian crossing the corridor `ahead_m` in front of
// the start pose, active in [t0_s, t1_s]. Exercises the emergency stop.
void add_crossing_pedestrian(WorldModel& world, double ahead_m, double t0_s, double t1_s);

}  // namespace dualnav
