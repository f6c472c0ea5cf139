#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fbraid/dsl.hpp"
#include "fbraid/model.hpp"
#include "fbraid/report.hpp"

namespace fbraid::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

Vec2 operator+(Vec2 a, Vec2 b);
Vec2 operator-(Vec2 a, Vec2 b);
Vec2 operator*(double s, Vec2 v);
double norm(Vec2 v);

// Plane layout of the six disks on a ring around the origin, with the
// damping zones of each generator map. All maps are rigid (isometric) on
// the regions that carry the labeled samples and interpolate linearly to
// the identity across their damping shells.
struct DiskConfig {
  double ring_radius = 12.0;
  double disk_radius = 2.0;
  // interior rotations: rigid inside damp_inner of a center, identity
  // outside damp_outer
  double damp_inner = 2.2;
  double damp_outer = 2.8;
  // adjacent-disk swap: rigid inside swap_rigid of the pair midpoint,
  // identity outside swap_outer
  double swap_rigid = 9.0;
  double swap_outer = 12.0;
  // ring transport: rigid where | |p| - ring_radius | <= rigid halfwidth
  double ring_rigid_halfwidth = 3.2;
  double ring_outer_halfwidth = 5.0;
  int cantor_depth = 3;
  double tolerance = 1e-9;
  // rotation senses (counter-clockwise positive); pinned so the induced
  // label actions match the algebraic model
  int half_twist_sense = -1;
  int global_rotation_sense = +1;

  Vec2 center(int disk) const;  // 1-based
  void validate() const;        // throws std::invalid_argument
};

// Sample of the labeled material: a point on one branch of one wedge, with
// its finite ternary address along the branch.
struct LabeledPoint {
  Vec2 pos;
  int disk = 1;         // 1..6
  int branch = 0;       // 0..29
  std::string address;  // digits in {0,2}, length = cantor_depth
};

// Deterministic sample set: for each disk and branch, the left endpoints of
// the depth-d middle-third intervals, scaled into the branch segment.
// Yields 6 * 30 * 2^depth points.
std::vector<LabeledPoint> build_samples(const DiskConfig& cfg);

// Pointwise generator maps. Units of the interior rotation are branch
// steps (2*pi/30).
Vec2 eval_interior_rotation(const DiskConfig& cfg, int units, Vec2 p);
Vec2 eval_half_twist(const DiskConfig& cfg, int index, int sign, Vec2 p);
Vec2 eval_global_rotation(const DiskConfig& cfg, int sign, Vec2 p);
Vec2 eval_ring_transport(const DiskConfig& cfg, int sign, Vec2 p);

// Applies a word expression to a point, rightmost factor first.
Vec2 eval_expr(const DiskConfig& cfg, const dsl::Expr& expr, Vec2 p);

struct SampleMatch {
  bool bijective = false;
  bool addresses_preserved = false;
  bool labels_coherent = false;  // all points of a branch moved to one branch
  WedgeAction label_action;
  std::string detail;
};

// Moves every sample by the expression and matches the images back to the
// original sample set within cfg.tolerance. Fails (in the returned flags)
// when the matching is not a bijection or the induced label map is not a
// wedge action.
SampleMatch apply_expr_to_samples(const DiskConfig& cfg, const dsl::Expr& expr,
                                  const std::vector<LabeledPoint>& samples);

// Identity-outside-support checks for every compactly supported generator
// on a grid of ambient probe points, plus the six-fold identity of the
// global rotation.
CheckReport support_report(const DiskConfig& cfg, int grid = 50);

void write_svg(const std::string& path, const DiskConfig& cfg,
               const std::vector<LabeledPoint>& before, const std::vector<LabeledPoint>& after);

}  // namespace fbraid::geom
