#include "dualnav/zones.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "dualnav/errors.hpp"

namespace dualnav {

std::string zone_name(Zone z) {
  switch (z) {
    case Zone::kFront:
      return "front";
    case Zone::kLeft:
      return "left";
    case Zone::kRight:
      return "right";
    case Zone::kDown:
      return "down";
  }
  return "?";
}

std::string band_name(Band b) {
  return b == Band::kImmediate ? "immediate" : "distant";
}

int ZonePartition::count(Zone z) const {
  int n = 0;
  for (Zone q : zones) {
    if (q == z) ++n;
  }
  return n;
}

namespace {

// All quantities are doubled so cell centers and grid corners land on
// integers; side-of-line tests are exact.
struct IVec {
  std::int64_t x, y;
};

std::int64_t cross(IVec a, IVec b) { return a.x * b.y - a.y * b.x; }

}  // namespace

ZonePartition partition(std::optional<GridCell> vp_cell, int rows, int cols) {
  if (rows < 2 || cols < 2) throw RangeError("grid_dims", "partition needs at least 2x2");
  GridCell vp = vp_cell.value_or(GridCell{rows / 2, cols / 2});
  vp.row = std::clamp(vp.row, 0, rows - 1);
  vp.col = std::clamp(vp.col, 0, cols - 1);

  ZonePartition part;
  part.rows = rows;
  part.cols = cols;
  part.vp_cell = vp;
  part.zones.resize(static_cast<std::size_t>(rows) * cols);
  part.bands.resize(static_cast<std::size_t>(rows) * cols);

  const std::int64_t vx = 2 * vp.col + 1;  // doubled VP center
  const std::int64_t vy = 2 * vp.row + 1;
  const IVec tl{-vx, -vy};
  const IVec tr{2 * cols - vx, -vy};
  const IVec bl{-vx, 2 * rows - vy};
  const IVec br{2 * cols - vx, 2 * rows - vy};

  const int radius = static_cast<int>(std::floor(0.15 * std::max(rows, cols)));

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const IVec p{2 * static_cast<std::int64_t>(c - vp.col), 2 * static_cast<std::int64_t>(r - vp.row)};
      Zone z;
      if (p.x == 0 && p.y == 0) {
        z = Zone::kFront;
      } else if (cross(tl, p) >= 0 && cross(tr, p) <= 0) {
        z = Zone::kFront;
      } else if (cross(tl, p) < 0 && cross(bl, p) >= 0) {
        z = Zone::kLeft;
      } else if (cross(tr, p) > 0 && cross(br, p) <= 0) {
        z = Zone::kRight;
      } else {
        z = Zone::kDown;
      }
      const std::size_t idx = static_cast<std::size_t>(r) * cols + c;
      part.zones[idx] = z;
      const int cheb = std::max(std::abs(r - vp.row), std::abs(c - vp.col));
      part.bands[idx] = cheb <= radius ? Band::kDistant : Band::kImmediate;
    }
  }
  return part;
}

}  // namespace dualnav
