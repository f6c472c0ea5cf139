#include "fbraid/geom.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace fbraid::geom {

namespace {

constexpr double kBranchStep = 2.0 * std::numbers::pi / kBranches;
constexpr double kSlotStep = 2.0 * std::numbers::pi / kDisks;

Vec2 rotate_about(Vec2 center, double angle, Vec2 p) {
  double c = std::cos(angle), s = std::sin(angle);
  Vec2 d = p - center;
  return center + Vec2{c * d.x - s * d.y, s * d.x + c * d.y};
}

// Full angle inside r_rigid of the center, linear ramp to zero at r_outer.
Vec2 damped_rotate(Vec2 center, double angle, double r_rigid, double r_outer, Vec2 p) {
  double d = norm(p - center);
  if (d >= r_outer) return p;
  double factor = d <= r_rigid ? 1.0 : (r_outer - d) / (r_outer - r_rigid);
  return rotate_about(center, angle * factor, p);
}

}  // namespace

Vec2 operator+(Vec2 a, Vec2 b) { return Vec2{a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return Vec2{a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 v) { return Vec2{s * v.x, s * v.y}; }
double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Vec2 DiskConfig::center(int disk) const {
  if (disk < 1 || disk > kDisks) throw std::out_of_range("disk index out of 1..6");
  double angle = (disk - 1) * kSlotStep;
  return Vec2{ring_radius * std::cos(angle), ring_radius * std::sin(angle)};
}

void DiskConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid geometry: ") + what);
  };
  require(disk_radius > 0 && ring_radius > 0 && tolerance > 0, "radii must be positive");
  require(cantor_depth >= 1 && cantor_depth <= 12, "depth must be in 1..12");
  require(std::abs(half_twist_sense) == 1 && std::abs(global_rotation_sense) == 1,
          "rotation senses must be +1 or -1");
  require(damp_inner > disk_radius, "interior damping must start outside the disk");
  require(damp_outer > damp_inner, "interior damping shell must have positive width");
  require(ring_outer_halfwidth > ring_rigid_halfwidth, "ring shell must have positive width");

  double adjacent = norm(center(1) - center(2));
  require(adjacent > 2 * disk_radius, "disks must be pairwise disjoint");
  require(damp_outer < adjacent - disk_radius, "interior damping shells must avoid other disks");

  // swap zone around the midpoint of an adjacent pair
  double half = adjacent / 2.0;
  require(swap_rigid >= half + damp_outer, "swap rigid zone must carry both damping annuli");
  require(swap_outer > swap_rigid, "swap shell must have positive width");
  Vec2 mid = 0.5 * (center(1) + center(2));
  for (int d = 3; d <= kDisks; ++d)
    require(swap_outer < norm(mid - center(d)) - damp_outer,
            "swap zone must avoid the non-carried disks");

  require(ring_rigid_halfwidth >= damp_outer, "ring rigid zone must carry the damping annuli");
}

std::vector<LabeledPoint> build_samples(const DiskConfig& cfg) {
  cfg.validate();
  std::vector<LabeledPoint> out;
  int points_per_branch = 1 << cfg.cantor_depth;
  out.reserve(static_cast<std::size_t>(kDisks) * kBranches * points_per_branch);
  double radial_lo = 0.25 * cfg.disk_radius;
  double radial_hi = 0.90 * cfg.disk_radius;
  for (int disk = 1; disk <= kDisks; ++disk) {
    Vec2 c = cfg.center(disk);
    for (int branch = 0; branch < kBranches; ++branch) {
      double angle = branch * kBranchStep;
      Vec2 dir{std::cos(angle), std::sin(angle)};
      for (int mask = 0; mask < points_per_branch; ++mask) {
        // left endpoint of the middle-third interval selected by the mask
        std::string address;
        double t = 0.0, scale = 1.0 / 3.0;
        for (int bit = cfg.cantor_depth - 1; bit >= 0; --bit) {
          int digit = ((mask >> bit) & 1) ? 2 : 0;
          address += static_cast<char>('0' + digit);
          t += digit * scale;
          scale /= 3.0;
        }
        double radial = radial_lo + t * (radial_hi - radial_lo);
        out.push_back(LabeledPoint{c + radial * dir, disk, branch, address});
      }
    }
  }
  return out;
}

Vec2 eval_interior_rotation(const DiskConfig& cfg, int units, Vec2 p) {
  double angle = units * kBranchStep;
  for (int d = 1; d <= kDisks; ++d) {
    Vec2 c = cfg.center(d);
    if (norm(p - c) < cfg.damp_outer)
      return damped_rotate(c, angle, cfg.damp_inner, cfg.damp_outer, p);
  }
  return p;
}

Vec2 eval_half_twist(const DiskConfig& cfg, int index, int sign, Vec2 p) {
  if (index < 1 || index > kDisks) throw std::out_of_range("half twist index out of 1..6");
  Vec2 a = cfg.center(index);
  Vec2 b = cfg.center(index % kDisks + 1);
  Vec2 mid = 0.5 * (a + b);
  double swing = cfg.half_twist_sense * std::numbers::pi;

  auto counter = [&](Vec2 q, double angle) {
    for (Vec2 c : {a, b})
      if (norm(q - c) < cfg.damp_outer)
        return damped_rotate(c, angle, cfg.damp_inner, cfg.damp_outer, q);
    return q;
  };

  if (sign > 0) {
    Vec2 q = damped_rotate(mid, swing, cfg.swap_rigid, cfg.swap_outer, p);
    return counter(q, -swing);
  }
  Vec2 q = counter(p, swing);
  return damped_rotate(mid, -swing, cfg.swap_rigid, cfg.swap_outer, q);
}

Vec2 eval_global_rotation(const DiskConfig& cfg, int sign, Vec2 p) {
  return rotate_about(Vec2{}, sign * cfg.global_rotation_sense * kSlotStep, p);
}

Vec2 eval_ring_transport(const DiskConfig& cfg, int sign, Vec2 p) {
  double turn = cfg.global_rotation_sense * kSlotStep;
  auto ring_rotate = [&](Vec2 q, double angle) {
    double off = std::abs(norm(q) - cfg.ring_radius);
    if (off >= cfg.ring_outer_halfwidth) return q;
    double factor = off <= cfg.ring_rigid_halfwidth
                        ? 1.0
                        : (cfg.ring_outer_halfwidth - off) /
                              (cfg.ring_outer_halfwidth - cfg.ring_rigid_halfwidth);
    return rotate_about(Vec2{}, angle * factor, q);
  };
  int counter_units = -cfg.global_rotation_sense * (kBranches / kDisks);
  if (sign > 0) {
    // transport along the ring, then unwind each carried interior
    Vec2 q = ring_rotate(p, turn);
    return eval_interior_rotation(cfg, counter_units, q);
  }
  Vec2 q = eval_interior_rotation(cfg, -counter_units, p);
  return ring_rotate(q, -turn);
}

namespace {

Vec2 eval_atom(const DiskConfig& cfg, std::string_view atom, int sign, Vec2 p) {
  if (atom.size() == 2 && atom[0] == 's' && atom[1] >= '1' && atom[1] <= '6')
    return eval_half_twist(cfg, atom[1] - '0', sign, p);
  if (atom == "R") return eval_interior_rotation(cfg, sign, p);
  if (atom == "a1") return eval_global_rotation(cfg, sign, p);
  if (atom == "rho" || atom == "a1r") return eval_ring_transport(cfg, sign, p);
  if (atom == "a2") {
    // a1 s5 R, rightmost applied first
    if (sign > 0) {
      Vec2 q = eval_interior_rotation(cfg, 1, p);
      q = eval_half_twist(cfg, 5, +1, q);
      return eval_global_rotation(cfg, +1, q);
    }
    Vec2 q = eval_global_rotation(cfg, -1, p);
    q = eval_half_twist(cfg, 5, -1, q);
    return eval_interior_rotation(cfg, -1, q);
  }
  if (atom == "id") return p;
  throw std::invalid_argument("no pointwise map for atom '" + std::string(atom) + "'");
}

Vec2 eval_node(const DiskConfig& cfg, const dsl::Expr& expr, bool inverted, Vec2 p) {
  using Kind = dsl::Expr::Kind;
  switch (expr.kind) {
    case Kind::kAtom:
      return eval_atom(cfg, expr.atom, inverted ? -1 : +1, p);
    case Kind::kPower: {
      long effective = inverted ? -expr.exponent : expr.exponent;
      if (effective > 100'000L || effective < -100'000L)
        throw std::invalid_argument("map power out of supported range");
      if (expr.factors.front().kind == Kind::kAtom && expr.factors.front().atom == "R")
        return eval_interior_rotation(cfg, static_cast<int>(effective), p);
      Vec2 q = p;
      for (long k = 0; k < std::abs(effective); ++k)
        q = eval_node(cfg, expr.factors.front(), effective < 0, q);
      return q;
    }
    case Kind::kProduct: {
      Vec2 q = p;
      if (!inverted) {
        for (auto it = expr.factors.rbegin(); it != expr.factors.rend(); ++it)
          q = eval_node(cfg, *it, false, q);
      } else {
        for (const dsl::Expr& factor : expr.factors) q = eval_node(cfg, factor, true, q);
      }
      return q;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

Vec2 eval_expr(const DiskConfig& cfg, const dsl::Expr& expr, Vec2 p) {
  return eval_node(cfg, expr, false, p);
}

SampleMatch apply_expr_to_samples(const DiskConfig& cfg, const dsl::Expr& expr,
                                  const std::vector<LabeledPoint>& samples) {
  SampleMatch result;
  std::size_t n = samples.size();
  std::vector<int> image(n, -1);
  std::vector<int> hits(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    Vec2 moved = eval_expr(cfg, expr, samples[i].pos);
    int best = -1;
    double best_dist = cfg.tolerance;
    for (std::size_t j = 0; j < n; ++j) {
      double d = norm(moved - samples[j].pos);
      if (d <= best_dist) {
        best = static_cast<int>(j);
        best_dist = d;
      }
    }
    if (best < 0) {
      result.detail = "sample " + std::to_string(i) + " has no match within tolerance";
      return result;
    }
    image[i] = best;
    ++hits[best];
  }
  for (std::size_t j = 0; j < n; ++j)
    if (hits[j] != 1) {
      result.detail = "matching is not a bijection at sample " + std::to_string(j);
      return result;
    }
  result.bijective = true;

  result.addresses_preserved = true;
  for (std::size_t i = 0; i < n; ++i)
    if (samples[i].address != samples[image[i]].address) {
      result.addresses_preserved = false;
      result.detail = "address changed for sample " + std::to_string(i);
      return result;
    }

  // condense the point matching to a wedge action
  std::vector<int> slot_image(kDisks + 1, 0);
  std::array<int, kDisks> shift{};
  std::vector<int> branch_image(kDisks * kBranches, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const LabeledPoint& src = samples[i];
    const LabeledPoint& dst = samples[image[i]];
    int key = (src.disk - 1) * kBranches + src.branch;
    int val = (dst.disk - 1) * kBranches + dst.branch;
    if (branch_image[key] == -1)
      branch_image[key] = val;
    else if (branch_image[key] != val) {
      result.detail = "branch split across targets: disk " + std::to_string(src.disk) +
                      " branch " + std::to_string(src.branch);
      return result;
    }
    if (slot_image[src.disk] == 0)
      slot_image[src.disk] = dst.disk;
    else if (slot_image[src.disk] != dst.disk) {
      result.detail = "disk split across targets: disk " + std::to_string(src.disk);
      return result;
    }
  }
  for (int d = 1; d <= kDisks; ++d) {
    int target = slot_image[d];
    bool shift_set = false;
    for (int b = 0; b < kBranches; ++b) {
      int val = branch_image[(d - 1) * kBranches + b];
      if (val < 0) continue;
      int branch_shift = ((val % kBranches) - b % kBranches + kBranches) % kBranches;
      if (!shift_set) {
        shift[target - 1] = branch_shift;
        shift_set = true;
      } else if (shift[target - 1] != branch_shift) {
        result.detail = "incoherent branch shift on disk " + std::to_string(d);
        return result;
      }
    }
  }
  result.labels_coherent = true;
  std::vector<int> perm(slot_image.begin() + 1, slot_image.end());
  result.label_action = WedgeAction(Permutation(perm), shift);
  result.detail = "label action " + result.label_action.slot_permutation().cycles();
  return result;
}

CheckReport support_report(const DiskConfig& cfg, int grid) {
  cfg.validate();
  CheckReport report;
  report.suite = "generator-supports";
  double extent = cfg.ring_radius + cfg.ring_outer_halfwidth + 1.0;
  std::vector<Vec2> probes;
  probes.reserve(static_cast<std::size_t>(grid) * grid);
  for (int ix = 0; ix < grid; ++ix)
    for (int iy = 0; iy < grid; ++iy)
      probes.push_back(Vec2{-extent + 2 * extent * ix / (grid - 1),
                            -extent + 2 * extent * iy / (grid - 1)});

  constexpr double kExact = 1e-12;

  for (int i = 1; i <= kDisks; ++i) {
    Vec2 mid = 0.5 * (cfg.center(i) + cfg.center(i % kDisks + 1));
    bool ok = true;
    for (Vec2 p : probes) {
      if (norm(p - mid) <= cfg.swap_outer) continue;
      if (norm(eval_half_twist(cfg, i, +1, p) - p) > kExact) {
        ok = false;
        break;
      }
    }
    report.add("half-twist-" + std::to_string(i) + "-support", ok);
  }

  {
    bool ok = true;
    for (Vec2 p : probes) {
      bool in_support = false;
      for (int d = 1; d <= kDisks; ++d)
        if (norm(p - cfg.center(d)) <= cfg.damp_outer) in_support = true;
      if (in_support) continue;
      if (norm(eval_interior_rotation(cfg, 1, p) - p) > kExact) {
        ok = false;
        break;
      }
    }
    report.add("interior-rotation-support", ok);
  }

  {
    bool ok = true;
    for (Vec2 p : probes) {
      if (std::abs(norm(p) - cfg.ring_radius) <= cfg.ring_outer_halfwidth) continue;
      if (norm(eval_ring_transport(cfg, +1, p) - p) > kExact) {
        ok = false;
        break;
      }
    }
    report.add("ring-transport-support", ok);
  }

  {
    bool ok = true;
    for (Vec2 p : probes) {
      Vec2 q = p;
      for (int k = 0; k < kDisks; ++k) q = eval_global_rotation(cfg, +1, q);
      if (norm(q - p) > cfg.tolerance) {
        ok = false;
        break;
      }
    }
    report.add("global-rotation-order-six", ok);
    report.add("global-rotation-fixes-origin",
               norm(eval_global_rotation(cfg, +1, Vec2{})) <= kExact);
  }

  return report;
}

void write_svg(const std::string& path, const DiskConfig& cfg,
               const std::vector<LabeledPoint>& before, const std::vector<LabeledPoint>& after) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SVG file '" + path + "'");
  double extent = cfg.ring_radius + cfg.ring_outer_halfwidth + 1.0;
  double size = 800.0;
  auto sx = [&](double x) { return (x + extent) / (2 * extent) * size; };
  auto sy = [&](double y) { return (extent - y) / (2 * extent) * size; };
  static const char* kColors[kDisks] = {"#d33", "#e80", "#2a2", "#09c", "#55d", "#c3c"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int d = 1; d <= kDisks; ++d) {
    Vec2 c = cfg.center(d);
    out << "<circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\""
        << cfg.disk_radius / (2 * extent) * size
        << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << sx(c.x) << "\" y=\"" << sy(c.y) << "\" font-size=\"14\" fill=\"#999\""
        << " text-anchor=\"middle\">" << d << "</text>\n";
  }
  for (const LabeledPoint& p : before)
    out << "<circle cx=\"" << sx(p.pos.x) << "\" cy=\"" << sy(p.pos.y)
        << "\" r=\"1.2\" fill=\"#ccc\"/>\n";
  for (const LabeledPoint& p : after)
    out << "<circle cx=\"" << sx(p.pos.x) << "\" cy=\"" << sy(p.pos.y) << "\" r=\"1.2\" fill=\""
        << kColors[p.disk - 1] << "\"/>\n";
  out << "</svg>\n";
}

}  // namespace fbraid::geom
