#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fbraid/model.hpp"
#include "fbraid/report.hpp"

namespace fbraid {

// Malformed trace document (unknown op, bad centralizer index, unparsable
// expression, missing field). Verification failures are reported, not
// thrown.
class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One transformation applied to the running element. The multiplier and
// claim are expressions in the word grammar (see dsl.hpp). A centralizer
// value j declares that the multiplier commutes with a1^j; the verifier
// checks the declaration before using the step.
struct TraceStep {
  enum class Op { kRightMultiply, kLeftMultiply, kConjugate };
  Op op = Op::kRightMultiply;
  std::string multiplier;
  std::optional<int> centralizer;  // 2 or 3 when present
  std::string claim;
};

struct DerivationTrace {
  int version = 1;
  std::string start;
  std::vector<TraceStep> steps;
  std::string final_expr;
};

std::string trace_op_name(TraceStep::Op op);
std::optional<TraceStep::Op> trace_op_from_name(std::string_view name);

DerivationTrace load_trace(const std::string& path);
void save_trace(const DerivationTrace& trace, const std::string& path);

// Replays the trace from its start element. Each step yields two report
// items: the centralizer declaration (when present) and the claimed result;
// a final item checks that the replayed element equals the declared final
// expression.
CheckReport verify_derivation(const Model& model, const DerivationTrace& trace);

// Conjugates the start, every multiplier, every claim and the final
// expression by the given word. Centralizer declarations are preserved;
// they stay valid whenever the conjugator normalizes both centralizers,
// which holds for all powers of a1.
DerivationTrace conjugate_trace(const DerivationTrace& trace, const std::string& conjugator);

}  // namespace fbraid
