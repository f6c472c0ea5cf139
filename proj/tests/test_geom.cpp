#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fbraid/geom.hpp"
#include "fbraid/serialize.hpp"

using namespace fbraid;
using namespace fbraid::geom;

namespace {

const Model model;

WedgeAction observed_action(const DiskConfig& cfg, const std::string& expr_text,
                            const std::vector<LabeledPoint>& samples) {
  SampleMatch match = apply_expr_to_samples(cfg, dsl::parse(expr_text), samples);
  REQUIRE_MESSAGE(match.bijective, match.detail);
  REQUIRE_MESSAGE(match.addresses_preserved, match.detail);
  REQUIRE_MESSAGE(match.labels_coherent, match.detail);
  return match.label_action;
}

}  // namespace

TEST_CASE("default configuration is valid, bad radii are rejected") {
  DiskConfig cfg;
  cfg.validate();

  DiskConfig bad = cfg;
  bad.disk_radius = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.damp_inner = cfg.disk_radius * 0.5;  // damping starts inside the material
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.swap_rigid = 4.0;  // cannot carry both disks
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.ring_radius = 3.0;  // disks overlap
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("config json roundtrip") {
  DiskConfig cfg;
  cfg.cantor_depth = 2;
  cfg.swap_outer = 11.5;
  DiskConfig again = config_from_json(config_to_json(cfg));
  CHECK(again.cantor_depth == 2);
  CHECK(again.swap_outer == doctest::Approx(11.5));
}

TEST_CASE("sample counts and containment") {
  DiskConfig cfg;
  cfg.cantor_depth = 1;
  auto samples = build_samples(cfg);
  CHECK(samples.size() == 360);  // 2 points per branch

  cfg.cantor_depth = 3;
  samples = build_samples(cfg);
  CHECK(samples.size() == 6 * 30 * 8);
  for (const LabeledPoint& p : samples)
    CHECK(norm(p.pos - cfg.center(p.disk)) < cfg.disk_radius);
}

TEST_CASE("interior rotation fixes centers and the far field") {
  DiskConfig cfg;
  for (int d = 1; d <= kDisks; ++d) {
    Vec2 c = cfg.center(d);
    Vec2 moved = eval_interior_rotation(cfg, 7, c);
    CHECK(norm(moved - c) < 1e-12);
  }
  Vec2 far{0.0, 0.0};
  CHECK(norm(eval_interior_rotation(cfg, 3, far) - far) == 0.0);

  // a full turn of every interior restores the samples pointwise
  cfg.cantor_depth = 2;
  auto samples = build_samples(cfg);
  for (const LabeledPoint& p : samples)
    CHECK(norm(eval_interior_rotation(cfg, kBranches, p.pos) - p.pos) < cfg.tolerance);
}

TEST_CASE("half twist swaps adjacent centers") {
  DiskConfig cfg;
  for (int i = 1; i <= kDisks; ++i) {
    int j = i % kDisks + 1;
    CHECK(norm(eval_half_twist(cfg, i, +1, cfg.center(i)) - cfg.center(j)) < 1e-9);
    CHECK(norm(eval_half_twist(cfg, i, +1, cfg.center(j)) - cfg.center(i)) < 1e-9);
    // inverse really is the inverse map
    Vec2 p{cfg.center(i).x + 0.7, cfg.center(i).y - 0.4};
    CHECK(norm(eval_half_twist(cfg, i, -1, eval_half_twist(cfg, i, +1, p)) - p) < 1e-9);
  }
}

TEST_CASE("global rotation and ring transport") {
  DiskConfig cfg;
  CHECK(norm(eval_global_rotation(cfg, +1, Vec2{})) == 0.0);
  CHECK(norm(eval_global_rotation(cfg, +1, cfg.center(3)) - cfg.center(4)) < 1e-9);

  Vec2 p{4.0, -7.0};
  Vec2 q = p;
  for (int k = 0; k < 6; ++k) q = eval_global_rotation(cfg, +1, q);
  CHECK(norm(q - p) < cfg.tolerance);

  // transport carries centers around the ring and is supported in the band
  CHECK(norm(eval_ring_transport(cfg, +1, cfg.center(6)) - cfg.center(1)) < 1e-9);
  Vec2 outside{0.1, 0.2};
  CHECK(norm(eval_ring_transport(cfg, +1, outside) - outside) == 0.0);
}

TEST_CASE("support report passes on the default grid") {
  DiskConfig cfg;
  CheckReport report = support_report(cfg);
  for (const CheckItem& item : report.items) CHECK_MESSAGE(item.pass, item.id);
}

TEST_CASE("generator label actions match the algebra") {
  DiskConfig cfg;
  cfg.cantor_depth = 2;  // 720 samples; the depth-3 run lives in the acceptance suite
  auto samples = build_samples(cfg);

  for (const char* name : {"s1", "s2", "s3", "s4", "s5", "s6", "R", "rho", "a1"}) {
    WedgeAction observed = observed_action(cfg, name, samples);
    CHECK_MESSAGE(observed == model.label_action(model.named(name)), name);
  }

  // a1r is the same map as rho
  CHECK(observed_action(cfg, "a1r", samples) == model.label_action(model.named("rho")));
}

TEST_CASE("composite words match the algebra") {
  DiskConfig cfg;
  cfg.cantor_depth = 2;
  auto samples = build_samples(cfg);

  WedgeAction a2 = observed_action(cfg, "a1 s5 R", samples);
  CHECK(a2 == model.label_action(model.named("a2")));
  CHECK(a2.order() == 5);
  CHECK(a2.fixed_disks() == std::vector<int>{6});
  CHECK(a2.branch_shift()[5] == 6);

  // a double swap returns both disks to their slots
  WedgeAction s1s1 = observed_action(cfg, "s1 s1", samples);
  CHECK(s1s1 == model.label_action(model.pow(model.named("s1"), 2)));
  CHECK(s1s1.is_identity());

  WedgeAction inverse_pair = observed_action(cfg, "s3^-1 s3", samples);
  CHECK(inverse_pair.is_identity());

  WedgeAction r_power = observed_action(cfg, "R^-7", samples);
  CHECK(r_power == model.label_action(model.pow(model.named("R"), -7)));
}

TEST_CASE("svg emitter writes a plot") {
  DiskConfig cfg;
  cfg.cantor_depth = 1;
  auto samples = build_samples(cfg);
  auto after = samples;
  dsl::Expr expr = dsl::parse("a1");
  for (LabeledPoint& p : after) p.pos = eval_expr(cfg, expr, p.pos);

  auto path = std::filesystem::temp_directory_path() / "fbraid_orbit.svg";
  write_svg(path.string(), cfg, samples, after);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line.find("<svg") != std::string::npos);
  std::filesystem::remove(path);
}
