#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualnav/perception.hpp"

namespace dualnav {

enum class Zone : std::uint8_t { kFront = 0, kLeft, kRight, kDown };
enum class Band : std::uint8_t { kImmediate = 0, kDistant };

std::string zone_name(Zone z);
std::string band_name(Band b);

// Total, exclusive assignment of every grid cell to a navigational zone
// and an immediate/distant band around the vanishing point.
struct ZonePartition {
  int rows = 0;
  int cols = 0;
  GridCell vp_cell;
  std::vector<Zone> zones;  // row-major
  std::vector<Band> bands;

  Zone zone(GridCell c) const { return zones[static_cast<std::size_t>(c.row) * cols + c.col]; }
  Band band(GridCell c) const { return bands[static_cast<std::size_t>(c.row) * cols + c.col]; }
  int count(Zone z) const;
};

// Rays from the VP cell to the four grid corners split cells into front /
// left / right / down by exact side-of-line tests on cell centers; ties
// resolve front > left > right > down. Cells within Chebyshev radius
// floor(0.15 * max(rows, cols)) of the VP are the distant band. A missing
// VP falls back to the grid-center cell.
ZonePartition partition(std::optional<GridCell> vp_cell, int rows, int cols);

}  // namespace dualnav
