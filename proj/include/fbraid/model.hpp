#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fbraid/braid.hpp"
#include "fbraid/report.hpp"

namespace fbraid {

inline constexpr int kDisks = 6;
inline constexpr int kBranches = 30;

// Interior rotation count per disk, in units of one branch step (2*pi/30).
using Framing = std::array<int, kDisks>;

// Which factor's slot permutation transports the other factor's framing in
// a product. Both choices give a consistent group; the default matches
// framings indexed by target slot.
enum class FramingTransport { kLeftPermutesRight, kRightPermutesLeft };

struct ModelOptions {
  ArtinConvention artin = ArtinConvention::kStandard;
  FramingTransport transport = FramingTransport::kLeftPermutesRight;
  // The quotient identifies the full twist delta^6 with framing
  // kFullTwistFraming on every disk. Disabling it yields the plain
  // framed braid group (used by meta-tests to show the relation is
  // load-bearing).
  bool central_relation = true;
};

// Framed braid: a braid word on six strands together with one interior
// rotation count per disk. Equality is a quotient notion (Model::equal),
// not field comparison.
struct ModelElement {
  Framing framing{};
  BraidWord braid{kDisks};
};

struct WedgeLabel {
  int disk = 1;    // 1..6
  int branch = 0;  // 0..29
};

// Action on the 180 wedge labels: slots permuted, branch ids shifted per
// target slot (mod 30). This is the homomorphic image of the model group
// that the geometric simulator can observe.
class WedgeAction {
 public:
  WedgeAction();
  WedgeAction(Permutation slots, std::array<int, kDisks> branch_shift);

  WedgeLabel apply(WedgeLabel label) const;
  WedgeAction after(const WedgeAction& inner) const;
  WedgeAction inverse() const;
  bool is_identity() const;
  int order(int max_order = 1000) const;
  std::vector<int> fixed_disks() const;  // slots fixed by the permutation

  const Permutation& slot_permutation() const { return slots_; }
  const std::array<int, kDisks>& branch_shift() const { return shift_; }
  std::array<int, kDisks * kBranches> label_permutation() const;

  bool operator==(const WedgeAction&) const = default;

 private:
  Permutation slots_;
  std::array<int, kDisks> shift_{};  // normalized to 0..29, indexed by target slot
};

// Certificate for an equality decision. On failure the certificate names a
// homomorphic invariant separating the two elements; on success it records
// the detected full-twist power and the (zero) framing residual.
struct EqualityEvidence {
  enum class Certificate { kCentralResidual, kSlotPermutation, kExponentSum, kArtinImage };
  bool equal = false;
  Certificate decided_by = Certificate::kCentralResidual;
  std::optional<int> central_power;
  Framing residual{};
  long joint_invariant_delta = 0;
  std::string detail;
};

// The model group: framings semidirect the six-strand braid group, modulo
// the central relation that makes the unit rotation composed with the ring
// transport an order-6 element.
class Model {
 public:
  explicit Model(ModelOptions options = {});
  const ModelOptions& options() const { return options_; }

  ModelElement identity() const;
  // Named generators: s1..s6, R, rho (alias a1r), a1, a2, id (alias identity).
  ModelElement named(std::string_view name) const;

  ModelElement mul(const ModelElement& a, const ModelElement& b) const;
  ModelElement inv(const ModelElement& a) const;
  ModelElement pow(const ModelElement& a, int k) const;
  ModelElement conj(const ModelElement& g, const ModelElement& x) const;  // g x g^-1

  bool equal(const ModelElement& a, const ModelElement& b) const;
  EqualityEvidence equal_certified(const ModelElement& a, const ModelElement& b) const;
  bool commutes(const ModelElement& a, const ModelElement& b) const;
  std::optional<int> element_order(const ModelElement& a, int max_k) const;

  WedgeAction label_action(const ModelElement& a) const;
  long joint_invariant(const ModelElement& a) const;

  // Checks the five defining relations of the generator family, including
  // the telescoped expansion of the fifth power of a2 down to the identity.
  CheckReport verify_relations() const;

  // Framing paired with one full twist (delta^6) by the central relation.
  static constexpr int kFullTwistFraming = kBranches;

 private:
  ModelOptions options_;
};

}  // namespace fbraid
