#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dualnav/patch_grid.hpp"
#include "dualnav/vtime.hpp"
#include "dualnav/world.hpp"

namespace dualnav {

// Surface classes emitted by the synthetic segmenter. kOpen marks cells
// whose ray leaves the modelled range; they belong to no mask.
enum class SurfaceClass : std::uint8_t {
  kWall = 0,
  kFloor,
  kDoor,
  kSign,
  kObstacle,
  kPerson,
  kOpen
};

std::string surface_class_name(SurfaceClass c);

struct GridCell {
  int row = 0;
  int col = 0;
  friend bool operator==(GridCell a, GridCell b) { return a.row == b.row && a.col == b.col; }
  friend bool operator<(GridCell a, GridCell b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

struct SegmentMask {
  SurfaceClass cls = SurfaceClass::kWall;
  std::vector<GridCell> cells;  // non-empty, within grid bounds
};

struct SignDetection {
  std::string text;
  GridCell cell;        // in the detecting camera's grid
  double distance = 0;  // metres, > 0
};

enum class CameraId { kFront = 0, kLeft, kRight };
std::string camera_name(CameraId id);

struct CameraSign {
  CameraId camera = CameraId::kFront;
  SignDetection detection;
};

// Three wide-angle cameras; offsets are clockwise-positive bearings
// relative to the robot heading.
struct CameraRig {
  struct Camera {
    CameraId id;
    double offset_deg;
  };
  std::array<Camera, 3> cameras{{{CameraId::kFront, 0.0},
                                 {CameraId::kLeft, -90.0},
                                 {CameraId::kRight, +90.0}}};
  double hfov_deg = 90.0;
  double range_m = 8.0;
};

// Fixed projection model shared by the encoder, segmenter and VP logic.
struct FrontCameraModel {
  int rows = 14;
  int cols = 14;
  double hfov_deg = 90.0;
  double vfov_deg = 90.0;
  double cam_height_m = 1.0;
  double band_cutoff_m = 3.5;  // immediate vs distant
  double max_range_m = 30.0;

  double azimuth_of_col(int c) const {  // clockwise-positive
    return ((c + 0.5) / cols - 0.5) * hfov_deg;
  }
  double elevation_of_row(int r) const {
    return (0.5 - (r + 0.5) / rows) * vfov_deg;
  }
  int col_of_azimuth(double az) const;
  int row_of_elevation(double el) const;
};

// What one grid cell of the front camera sees.
struct CellView {
  SurfaceClass cls = SurfaceClass::kOpen;
  double distance = 0.0;
  bool immediate = false;
};

CellView classify_cell(const Pose& pose, const WorldModel& world, const FrontCameraModel& cam,
                       int row, int col, VirtualTime t = VirtualTime{0});

// Patch-level synthetic embedding of the front view: per cell, a fixed
// unit basis vector keyed by (class, immediate|distant) plus seeded
// gaussian noise, re-normalized. Pure function of (pose, world, sigma,
// seed, t); throws OutOfWorld when the pose is not in free space.
PatchGrid encode_frame(const Pose& pose, const WorldModel& world, double noise_sigma,
                       std::uint64_t seed, VirtualTime t = VirtualTime{0},
                       const FrontCameraModel& cam = FrontCameraModel{});

// Ray-cast semantic masks of the front view: contiguous same-class cell
// regions (4-connected), row-major discovery order.
std::vector<SegmentMask> segment_frame(const Pose& pose, const WorldModel& world,
                                       VirtualTime t = VirtualTime{0},
                                       const FrontCameraModel& cam = FrontCameraModel{});

// Every sign inside some camera's FOV cone within range, readable (viewing
// angle within 60 deg of the plate normal) and unoccluded. Exact text by
// default; char_corrupt_rate > 0 flips characters deterministically.
std::vector<CameraSign> read_signs(const Pose& pose, const WorldModel& world,
                                   const CameraRig& rig, VirtualTime t = VirtualTime{0},
                                   double char_corrupt_rate = 0.0, std::uint64_t seed = 0,
                                   const FrontCameraModel& cam = FrontCameraModel{});

// ---- Provider interfaces ------------------------------------------------
// Systems One/Two consume these; the synthetic stack below is the default
// backend, a real-model stack can be slotted in without touching them.

class FrameEncoder {
 public:
  virtual ~FrameEncoder() = default;
  virtual PatchGrid encode(const Pose& pose, const WorldModel& world, VirtualTime t) = 0;
};

class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual std::vector<SegmentMask> segment(const Pose& pose, const WorldModel& world,
                                           VirtualTime t) = 0;
};

class SignReader {
 public:
  virtual ~SignReader() = default;
  virtual std::vector<CameraSign> read(const Pose& pose, const WorldModel& world,
                                       VirtualTime t) = 0;
};

class RangeSensor {
 public:
  virtual ~RangeSensor() = default;
  virtual double range(const Pose& pose, const WorldModel& world, VirtualTime t) = 0;
};

struct SyntheticOptions {
  double noise_sigma = 0.05;
  double char_corrupt_rate = 0.0;
  std::uint64_t seed = 1;
};

class SyntheticPerception : public FrameEncoder,
                            public Segmenter,
                            public SignReader,
                            public RangeSensor {
 public:
  explicit SyntheticPerception(SyntheticOptions opts = {}) : opts_(opts) {}

  PatchGrid encode(const Pose& pose, const WorldModel& world, VirtualTime t) override {
    return encode_frame(pose, world, opts_.noise_sigma, opts_.seed, t, cam_);
  }
  std::vector<SegmentMask> segment(const Pose& pose, const WorldModel& world,
                                   VirtualTime t) override {
    return segment_frame(pose, world, t, cam_);
  }
  std::vector<CameraSign> read(const Pose& pose, const WorldModel& world,
                               VirtualTime t) override {
    return read_signs(pose, world, rig_, t, opts_.char_corrupt_rate, opts_.seed, cam_);
  }
  double range(const Pose& pose, const WorldModel& world, VirtualTime t) override {
    return ultrasonic_range(pose, world, t);
  }

  const FrontCameraModel& camera() const { return cam_; }
  const CameraRig& rig() const { return rig_; }

 private:
  SyntheticOptions opts_;
  FrontCameraModel cam_;
  CameraRig rig_;
};

struct Providers {
  std::shared_ptr<FrameEncoder> encoder;
  std::shared_ptr<Segmenter> segmenter;
  std::shared_ptr<SignReader> signs;
  std::shared_ptr<RangeSensor> ranger;
  FrontCameraModel camera;

  static Providers synthetic(SyntheticOptions opts = {});
};

}  // namespace dualnav
