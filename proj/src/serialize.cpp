#include "fbraid/serialize.hpp"

namespace fbraid {

namespace {

const char* certificate_name(EqualityEvidence::Certificate c) {
  switch (c) {
    case EqualityEvidence::Certificate::kCentralResidual:
      return "central-residual";
    case EqualityEvidence::Certificate::kSlotPermutation:
      return "slot-permutation";
    case EqualityEvidence::Certificate::kExponentSum:
      return "exponent-sum";
    case EqualityEvidence::Certificate::kArtinImage:
      return "free-group-image";
  }
  return "unknown";
}

}  // namespace

nlohmann::ordered_json report_to_json(const CheckReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckItem& item : report.items) {
    nlohmann::ordered_json entry;
    entry["id"] = item.id;
    entry["pass"] = item.pass;
    if (!item.detail.empty()) entry["detail"] = item.detail;
    checks.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["checks"] = std::move(checks);
  out["pass"] = report.all_pass();
  return out;
}

nlohmann::ordered_json evidence_to_json(const EqualityEvidence& evidence) {
  nlohmann::ordered_json out;
  out["equal"] = evidence.equal;
  out["decided_by"] = certificate_name(evidence.decided_by);
  if (evidence.central_power) {
    out["full_twist_power"] = *evidence.central_power;
    out["framing_residual"] = evidence.residual;
  }
  out["joint_invariant_delta"] = evidence.joint_invariant_delta;
  out["detail"] = evidence.detail;
  return out;
}

nlohmann::ordered_json wedge_action_to_json(const WedgeAction& action) {
  std::vector<int> slot_image;
  for (int d = 1; d <= kDisks; ++d) slot_image.push_back(action.slot_permutation().apply(d));
  nlohmann::ordered_json out;
  out["slot_image"] = slot_image;
  out["slot_cycles"] = action.slot_permutation().cycles();
  out["branch_shift"] = action.branch_shift();
  out["fixed_disks"] = action.fixed_disks();
  out["order"] = action.order();
  return out;
}

nlohmann::ordered_json trace_to_json(const DerivationTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const TraceStep& step : trace.steps) {
    nlohmann::ordered_json entry;
    entry["op"] = trace_op_name(step.op);
    entry["multiplier"] = step.multiplier;
    if (step.centralizer)
      entry["centralizer"] = *step.centralizer;
    else
      entry["centralizer"] = nullptr;
    entry["claim"] = step.claim;
    steps.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["version"] = trace.version;
  out["start"] = trace.start;
  out["steps"] = std::move(steps);
  out["final"] = trace.final_expr;
  return out;
}

DerivationTrace trace_from_json(const nlohmann::json& doc) {
  try {
    DerivationTrace trace;
    trace.version = doc.at("version").get<int>();
    if (trace.version != 1)
      throw TraceError("unsupported trace version " + std::to_string(trace.version));
    trace.start = doc.at("start").get<std::string>();
    trace.final_expr = doc.at("final").get<std::string>();
    for (const auto& entry : doc.at("steps")) {
      TraceStep step;
      std::string op_name = entry.at("op").get<std::string>();
      auto op = trace_op_from_name(op_name);
      if (!op) throw TraceError("unknown trace op '" + op_name + "'");
      step.op = *op;
      step.multiplier = entry.at("multiplier").get<std::string>();
      if (entry.contains("centralizer") && !entry.at("centralizer").is_null()) {
        int j = entry.at("centralizer").get<int>();
        if (j != 2 && j != 3)
          throw TraceError("centralizer index must be 2 or 3, got " + std::to_string(j));
        step.centralizer = j;
      }
      step.claim = entry.at("claim").get<std::string>();
      trace.steps.push_back(std::move(step));
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw TraceError(std::string("malformed trace document: ") + e.what());
  }
}

nlohmann::ordered_json config_to_json(const geom::DiskConfig& cfg) {
  nlohmann::ordered_json out;
  out["ring_radius"] = cfg.ring_radius;
  out["disk_radius"] = cfg.disk_radius;
  out["damp_inner"] = cfg.damp_inner;
  out["damp_outer"] = cfg.damp_outer;
  out["swap_rigid"] = cfg.swap_rigid;
  out["swap_outer"] = cfg.swap_outer;
  out["ring_rigid_halfwidth"] = cfg.ring_rigid_halfwidth;
  out["ring_outer_halfwidth"] = cfg.ring_outer_halfwidth;
  out["cantor_depth"] = cfg.cantor_depth;
  out["tolerance"] = cfg.tolerance;
  out["half_twist_sense"] = cfg.half_twist_sense;
  out["global_rotation_sense"] = cfg.global_rotation_sense;
  return out;
}

geom::DiskConfig config_from_json(const nlohmann::json& doc) {
  geom::DiskConfig cfg;
  auto read_double = [&doc](const char* key, double& field) {
    if (doc.contains(key)) field = doc.at(key).get<double>();
  };
  auto read_int = [&doc](const char* key, int& field) {
    if (doc.contains(key)) field = doc.at(key).get<int>();
  };
  read_double("ring_radius", cfg.ring_radius);
  read_double("disk_radius", cfg.disk_radius);
  read_double("damp_inner", cfg.damp_inner);
  read_double("damp_outer", cfg.damp_outer);
  read_double("swap_rigid", cfg.swap_rigid);
  read_double("swap_outer", cfg.swap_outer);
  read_double("ring_rigid_halfwidth", cfg.ring_rigid_halfwidth);
  read_double("ring_outer_halfwidth", cfg.ring_outer_halfwidth);
  read_int("cantor_depth", cfg.cantor_depth);
  read_double("tolerance", cfg.tolerance);
  read_int("half_twist_sense", cfg.half_twist_sense);
  read_int("global_rotation_sense", cfg.global_rotation_sense);
  cfg.validate();
  return cfg;
}

}  // namespace fbraid
