#include "dualnav/perception.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "dualnav/errors.hpp"
#include "dualnav/geometry.hpp"
#include "dualnav/rng.hpp"

namespace dualnav {

std::string surface_class_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::kWall:
      return "wall";
    case SurfaceClass::kFloor:
      return "floor";
    case SurfaceClass::kDoor:
      return "door";
    case SurfaceClass::kSign:
      return "sign";
    case SurfaceClass::kObstacle:
      return "obstacle";
    case SurfaceClass::kPerson:
      return "person";
    case SurfaceClass::kOpen:
      return "open";
  }
  return "?";
}

std::string camera_name(CameraId id) {
  switch (id) {
    case CameraId::kFront:
      return "front";
    case CameraId::kLeft:
      return "left";
    case CameraId::kRight:
      return "right";
  }
  return "?";
}

int FrontCameraModel::col_of_azimuth(double az) const {
  const int c = static_cast<int>(std::floor((az / hfov_deg + 0.5) * cols));
  return std::clamp(c, 0, cols - 1);
}

int FrontCameraModel::row_of_elevation(double el) const {
  const int r = static_cast<int>(std::floor((0.5 - el / vfov_deg) * rows));
  return std::clamp(r, 0, rows - 1);
}

CellView classify_cell(const Pose& pose, const WorldModel& world, const FrontCameraModel& cam,
                       int row, int col, VirtualTime t) {
  const double az = cam.azimuth_of_col(col);
  const double el = cam.elevation_of_row(row);
  const Vec2 dir = unit_from_deg(pose.yaw - az);
  const Vec2 origin = pose.position();

  const RayHit wall = world.raycast_wall(origin, dir, cam.max_range_m);
  int obs_index = -1;
  const auto obs = world.raycast_obstacle(origin, dir, t, cam.max_range_m, &obs_index);

  const double tan_el = std::tan(deg2rad(el));
  const double d_floor = el < 0 ? cam.cam_height_m / std::tan(deg2rad(-el)) : -1.0;

  CellView out;
  double best = cam.max_range_m;
  out.cls = SurfaceClass::kOpen;
  out.distance = cam.max_range_m;

  if (d_floor > 0 && d_floor < best && (!wall.hit || d_floor <= wall.distance) &&
      (!obs || d_floor <= obs->distance)) {
    out.cls = SurfaceClass::kFloor;
    out.distance = d_floor;
    best = d_floor;
  }

  if (obs && obs->distance < best) {
    const auto& o = world.obstacles[static_cast<std::size_t>(obs_index)];
    const double z = cam.cam_height_m + obs->distance * tan_el;
    if (z >= 0.0 && z <= o.height) {
      out.cls = o.person ? SurfaceClass::kPerson : SurfaceClass::kObstacle;
      out.distance = obs->distance;
      best = obs->distance;
    }
  }

  if (wall.hit && wall.distance < best) {
    const double z = cam.cam_height_m + wall.distance * tan_el;
    if (z >= -1e-9) {  // below 0 the floor has already won
      SurfaceClass cls = SurfaceClass::kWall;
      if (auto si = world.sign_at(wall.point)) {
        const auto& s = world.signs[static_cast<std::size_t>(*si)];
        if (z >= s.z0 && z <= s.z1) cls = SurfaceClass::kSign;
      }
      if (cls == SurfaceClass::kWall) {
        if (auto di = world.door_at(wall.point)) {
          if (z <= world.doors[static_cast<std::size_t>(*di)].height) cls = SurfaceClass::kDoor;
        }
      }
      out.cls = cls;
      out.distance = wall.distance;
    }
  }

  out.immediate = out.distance <= cam.band_cutoff_m;
  return out;
}

namespace {

std::uint64_t pose_bits(const Pose& p) {
  std::uint64_t h = 0xabcdef12cafe5678ull;
  std::uint64_t bits;
  std::memcpy(&bits, &p.x, 8);
  h = hash_combine(h, bits);
  std::memcpy(&bits, &p.y, 8);
  h = hash_combine(h, bits);
  std::memcpy(&bits, &p.yaw, 8);
  h = hash_combine(h, bits);
  return h;
}

void basis_vector(std::uint64_t seed, SurfaceClass cls, bool immediate, int dim, double* out) {
  const std::uint64_t key =
      hash_combine(hash_combine(seed, 0x6261736973ull /*"basis"*/),
                   static_cast<std::uint64_t>(cls) * 2 + (immediate ? 1 : 0));
  Rng rng(key);
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    out[i] = rng.gaussian();
    norm2 += out[i] * out[i];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (int i = 0; i < dim; ++i) out[i] *= inv;
}

}  // namespace

PatchGrid encode_frame(const Pose& pose, const WorldModel& world, double noise_sigma,
                       std::uint64_t seed, VirtualTime t, const FrontCameraModel& cam) {
  if (!world.inside(pose.position())) {
    throw OutOfWorld("encode_frame: pose outside free space");
  }
  PatchGrid grid(cam.rows, cam.cols, 32);

  // 7 classes x 2 bands of fixed unit basis vectors, drawn once per seed.
  std::vector<double> bases(7 * 2 * static_cast<std::size_t>(grid.dim));
  for (int c = 0; c < 7; ++c) {
    for (int b = 0; b < 2; ++b) {
      basis_vector(seed, static_cast<SurfaceClass>(c), b == 1, grid.dim,
                   bases.data() + (c * 2 + b) * static_cast<std::size_t>(grid.dim));
    }
  }

  Rng noise(hash_combine(hash_combine(seed, 0x6e6f697365ull /*"noise"*/), pose_bits(pose)));
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const CellView view = classify_cell(pose, world, cam, r, c, t);
      const std::size_t base_idx =
          (static_cast<std::size_t>(view.cls) * 2 + (view.immediate ? 1 : 0)) *
          static_cast<std::size_t>(grid.dim);
      double* p = grid.patch(r, c);
      double norm2 = 0.0;
      for (int d = 0; d < grid.dim; ++d) {
        p[d] = bases[base_idx + static_cast<std::size_t>(d)] +
               (noise_sigma > 0 ? noise_sigma * noise.gaussian() : 0.0);
        norm2 += p[d] * p[d];
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (int d = 0; d < grid.dim; ++d) p[d] *= inv;
    }
  }
  return grid;
}

std::vector<SegmentMask> segment_frame(const Pose& pose, const WorldModel& world, VirtualTime t,
                                       const FrontCameraModel& cam) {
  if (!world.inside(pose.position())) {
    throw OutOfWorld("segment_frame: pose outside free space");
  }
  const int R = cam.rows, C = cam.cols;
  std::vector<SurfaceClass> cls(static_cast<std::size_t>(R) * C);
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) {
      cls[static_cast<std::size_t>(r) * C + c] = classify_cell(pose, world, cam, r, c, t).cls;
    }
  }

  std::vector<SegmentMask> masks;
  std::vector<bool> used(static_cast<std::size_t>(R) * C, false);
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * C + c;
      if (used[idx] || cls[idx] == SurfaceClass::kOpen) continue;
      SegmentMask mask;
      mask.cls = cls[idx];
      // 4-connected flood fill.
      std::vector<GridCell> stack{{r, c}};
      used[idx] = true;
      while (!stack.empty()) {
        GridCell cur = stack.back();
        stack.pop_back();
        mask.cells.push_back(cur);
        const int dr[4] = {-1, 1, 0, 0};
        const int dc[4] = {0, 0, -1, 1};
        for (int k = 0; k < 4; ++k) {
          const int nr = cur.row + dr[k], nc = cur.col + dc[k];
          if (nr < 0 || nr >= R || nc < 0 || nc >= C) continue;
          const std::size_t nidx = static_cast<std::size_t>(nr) * C + nc;
          if (!used[nidx] && cls[nidx] == mask.cls) {
            used[nidx] = true;
            stack.push_back({nr, nc});
          }
        }
      }
      std::sort(mask.cells.begin(), mask.cells.end());
      masks.push_back(std::move(mask));
    }
  }
  return masks;
}

std::vector<CameraSign> read_signs(const Pose& pose, const WorldModel& world,
                                   const CameraRig& rig, VirtualTime t,
                                   double char_corrupt_rate, std::uint64_t seed,
                                   const FrontCameraModel& cam) {
  std::vector<CameraSign> out;
  for (const auto& camera : rig.cameras) {
    const double axis_world = pose.yaw - camera.offset_deg;
    for (std::size_t i = 0; i < world.signs.size(); ++i) {
      const auto& s = world.signs[i];
      const Vec2 rel = s.pos - pose.position();
      const double dist = rel.norm();
      if (dist < 1e-6 || dist > rig.range_m) continue;
      const double dir_to_sign = deg_from_vec(rel);
      const double az = bearing_from(axis_world, dir_to_sign);
      if (std::abs(az) > rig.hfov_deg / 2.0) continue;
      // Plates are unreadable at grazing view angles.
      const double view_angle = angular_distance(s.facing, deg_from_vec(rel * -1.0));
      if (view_angle > 60.0) continue;
      // Occlusion: the wall carrying the sign must be the first surface.
      const Vec2 dir = rel * (1.0 / dist);
      const RayHit wall = world.raycast_wall(pose.position(), dir, rig.range_m + 1.0);
      if (wall.hit && wall.distance < dist - 0.10) continue;
      if (auto obs = world.raycast_obstacle(pose.position(), dir, t, dist)) {
        if (obs->distance < dist - 0.10) continue;
      }

      std::string text = s.text;
      if (char_corrupt_rate > 0.0) {
        Rng rng(hash_combine(hash_combine(seed, fnv1a64(s.text)), pose_bits(pose)));
        for (auto& ch : text) {
          if (rng.uniform01() < char_corrupt_rate) ch = '#';
        }
      }

      const double z_center = (s.z0 + s.z1) / 2.0;
      const double el = rad2deg(std::atan2(z_center - cam.cam_height_m, dist));
      SignDetection det;
      det.text = std::move(text);
      det.cell = {cam.row_of_elevation(el), cam.col_of_azimuth(az)};
      det.distance = dist;
      out.push_back({camera.id, det});
    }
  }
  return out;
}

Providers Providers::synthetic(SyntheticOptions opts) {
  auto stack = std::make_shared<SyntheticPerception>(opts);
  Providers p;
  p.encoder = stack;
  p.segmenter = stack;
  p.signs = stack;
  p.ranger = stack;
  p.camera = stack->camera();
  return p;
}

}  // namespace dualnav
