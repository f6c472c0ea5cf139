#include "fbraid/trace.hpp"

#include <fstream>

#include "fbraid/dsl.hpp"
#include "fbraid/serialize.hpp"

namespace fbraid {

std::string trace_op_name(TraceStep::Op op) {
  switch (op) {
    case TraceStep::Op::kRightMultiply:
      return "right-multiply";
    case TraceStep::Op::kLeftMultiply:
      return "left-multiply";
    case TraceStep::Op::kConjugate:
      return "conjugate";
  }
  throw std::logic_error("unreachable trace op");
}

std::optional<TraceStep::Op> trace_op_from_name(std::string_view name) {
  if (name == "right-multiply") return TraceStep::Op::kRightMultiply;
  if (name == "left-multiply") return TraceStep::Op::kLeftMultiply;
  if (name == "conjugate") return TraceStep::Op::kConjugate;
  return std::nullopt;
}

DerivationTrace load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceError("cannot open trace file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw TraceError("trace file '" + path + "' is not valid JSON: " + e.what());
  }
  return trace_from_json(doc);
}

void save_trace(const DerivationTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw TraceError("cannot write trace file '" + path + "'");
  out << trace_to_json(trace).dump(2) << '\n';
}

namespace {

ModelElement eval_or_fail(const Model& model, const std::string& text, const std::string& where) {
  try {
    return dsl::eval(dsl::parse(text), model);
  } catch (const dsl::ParseError& e) {
    throw TraceError(where + ": " + e.what());
  }
}

}  // namespace

CheckReport verify_derivation(const Model& model, const DerivationTrace& trace) {
  CheckReport report;
  report.suite = "derivation-replay";

  ModelElement current = eval_or_fail(model, trace.start, "start expression");
  ModelElement a1 = model.named("a1");

  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    std::string tag = "step-" + std::to_string(k + 1);
    ModelElement multiplier =
        eval_or_fail(model, step.multiplier, tag + " multiplier expression");

    if (step.centralizer) {
      int j = *step.centralizer;
      if (j != 2 && j != 3)
        throw TraceError(tag + ": centralizer index must be 2 or 3, got " + std::to_string(j));
      bool ok = model.commutes(multiplier, model.pow(a1, j));
      report.add(tag + "-centralizer", ok,
                 "multiplier '" + step.multiplier + "' against a1^" + std::to_string(j));
    }

    switch (step.op) {
      case TraceStep::Op::kRightMultiply:
        current = model.mul(current, multiplier);
        break;
      case TraceStep::Op::kLeftMultiply:
        current = model.mul(multiplier, current);
        break;
      case TraceStep::Op::kConjugate:
        current = model.conj(multiplier, current);
        break;
    }

    ModelElement claim = eval_or_fail(model, step.claim, tag + " claim expression");
    EqualityEvidence ev = model.equal_certified(current, claim);
    report.add(tag + "-claim", ev.equal, ev.detail);
  }

  ModelElement declared = eval_or_fail(model, trace.final_expr, "final expression");
  EqualityEvidence ev = model.equal_certified(current, declared);
  report.add("final-element", ev.equal, ev.detail);
  return report;
}

DerivationTrace conjugate_trace(const DerivationTrace& trace, const std::string& conjugator) {
  try {
    dsl::parse(conjugator);
  } catch (const dsl::ParseError& e) {
    throw TraceError(std::string("conjugator expression: ") + e.what());
  }
  auto wrap = [&conjugator](const std::string& expr) {
    return "(" + conjugator + ") (" + expr + ") (" + conjugator + ")^-1";
  };
  DerivationTrace out;
  out.version = trace.version;
  out.start = wrap(trace.start);
  out.final_expr = wrap(trace.final_expr);
  out.steps.reserve(trace.steps.size());
  for (const TraceStep& step : trace.steps)
    out.steps.push_back(TraceStep{step.op, wrap(step.multiplier), step.centralizer,
                                  wrap(step.claim)});
  return out;
}

}  // namespace fbraid
