#include "fbraid/model.hpp"

#include <numeric>
#include <sstream>

namespace fbraid {

namespace {

int mod_branches(int v) {
  int r = v % kBranches;
  return r < 0 ? r + kBranches : r;
}

// result[pi(i)] = f[i]: pushes a slot-indexed vector forward along pi.
Framing permute_forward(const Permutation& pi, const Framing& f) {
  Framing out{};
  for (int i = 1; i <= kDisks; ++i) out[pi.apply(i) - 1] = f[i - 1];
  return out;
}

std::string framing_str(const Framing& f) {
  std::string out = "(";
  for (int i = 0; i < kDisks; ++i) {
    if (i) out += ", ";
    out += std::to_string(f[i]);
  }
  return out + ")";
}

bool is_zero(const Framing& f) {
  for (int v : f)
    if (v != 0) return false;
  return true;
}

}  // namespace

WedgeAction::WedgeAction() : slots_(Permutation::identity(kDisks)) {}

WedgeAction::WedgeAction(Permutation slots, std::array<int, kDisks> branch_shift)
    : slots_(std::move(slots)) {
  if (slots_.size() != kDisks) throw std::invalid_argument("wedge action needs 6 slots");
  for (int i = 0; i < kDisks; ++i) shift_[i] = mod_branches(branch_shift[i]);
}

WedgeLabel WedgeAction::apply(WedgeLabel label) const {
  if (label.disk < 1 || label.disk > kDisks) throw std::out_of_range("disk id out of range");
  int target = slots_.apply(label.disk);
  return WedgeLabel{target, mod_branches(label.branch + shift_[target - 1])};
}

WedgeAction WedgeAction::after(const WedgeAction& inner) const {
  std::array<int, kDisks> shift{};
  Permutation composed = slots_.after(inner.slots_);
  Permutation outer_inv = slots_.inverse();
  for (int j = 1; j <= kDisks; ++j)
    shift[j - 1] = mod_branches(shift_[j - 1] + inner.shift_[outer_inv.apply(j) - 1]);
  return WedgeAction(std::move(composed), shift);
}

WedgeAction WedgeAction::inverse() const {
  Permutation inv = slots_.inverse();
  std::array<int, kDisks> shift{};
  for (int j = 1; j <= kDisks; ++j) shift[j - 1] = mod_branches(-shift_[slots_.apply(j) - 1]);
  return WedgeAction(std::move(inv), shift);
}

bool WedgeAction::is_identity() const {
  if (!slots_.is_identity()) return false;
  for (int v : shift_)
    if (v != 0) return false;
  return true;
}

int WedgeAction::order(int max_order) const {
  WedgeAction acc;
  for (int k = 1; k <= max_order; ++k) {
    acc = after(acc);
    if (acc.is_identity()) return k;
  }
  throw std::runtime_error("wedge action order exceeds bound");
}

std::vector<int> WedgeAction::fixed_disks() const {
  std::vector<int> out;
  for (int d = 1; d <= kDisks; ++d)
    if (slots_.apply(d) == d) out.push_back(d);
  return out;
}

std::array<int, kDisks * kBranches> WedgeAction::label_permutation() const {
  std::array<int, kDisks * kBranches> out{};
  for (int d = 1; d <= kDisks; ++d)
    for (int b = 0; b < kBranches; ++b) {
      WedgeLabel image = apply(WedgeLabel{d, b});
      out[(d - 1) * kBranches + b] = (image.disk - 1) * kBranches + image.branch;
    }
  return out;
}

Model::Model(ModelOptions options) : options_(options) {}

ModelElement Model::identity() const { return ModelElement{}; }

ModelElement Model::named(std::string_view name) const {
  if (name.size() == 2 && name[0] == 's' && name[1] >= '1' && name[1] <= '6')
    return ModelElement{Framing{}, sigma_circular(name[1] - '0')};
  if (name == "R") {
    ModelElement r;
    r.framing.fill(1);
    return r;
  }
  if (name == "rho" || name == "a1r") return ModelElement{Framing{}, delta(kDisks)};
  if (name == "a1") return mul(named("rho"), pow(named("R"), 5));
  if (name == "a2") return mul(mul(named("a1"), named("s5")), named("R"));
  if (name == "id" || name == "identity") return identity();
  throw std::invalid_argument("unknown element name '" + std::string(name) + "'");
}

ModelElement Model::mul(const ModelElement& a, const ModelElement& b) const {
  ModelElement out{Framing{}, a.braid * b.braid};
  if (options_.transport == FramingTransport::kLeftPermutesRight) {
    Framing moved = permute_forward(permutation(a.braid), b.framing);
    for (int i = 0; i < kDisks; ++i) out.framing[i] = a.framing[i] + moved[i];
  } else {
    Permutation pb = permutation(b.braid);
    for (int i = 1; i <= kDisks; ++i)
      out.framing[i - 1] = a.framing[pb.apply(i) - 1] + b.framing[i - 1];
  }
  return out;
}

ModelElement Model::inv(const ModelElement& a) const {
  ModelElement out{Framing{}, a.braid.inverse()};
  Permutation pa = permutation(a.braid);
  if (options_.transport == FramingTransport::kLeftPermutesRight) {
    for (int j = 1; j <= kDisks; ++j) out.framing[j - 1] = -a.framing[pa.apply(j) - 1];
  } else {
    Permutation inv = pa.inverse();
    for (int i = 1; i <= kDisks; ++i) out.framing[i - 1] = -a.framing[inv.apply(i) - 1];
  }
  return out;
}

ModelElement Model::pow(const ModelElement& a, int k) const {
  ModelElement base = k >= 0 ? a : inv(a);
  ModelElement acc = identity();
  unsigned n = static_cast<unsigned>(k >= 0 ? k : -static_cast<long>(k));
  while (n > 0) {
    if (n & 1u) acc = mul(acc, base);
    n >>= 1u;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

ModelElement Model::conj(const ModelElement& g, const ModelElement& x) const {
  return mul(mul(g, x), inv(g));
}

EqualityEvidence Model::equal_certified(const ModelElement& a, const ModelElement& b) const {
  ModelElement d = mul(a, inv(b));
  EqualityEvidence ev;
  ev.joint_invariant_delta = joint_invariant(d);

  Permutation pd = permutation(d.braid);
  if (!pd.is_identity()) {
    ev.equal = false;
    ev.decided_by = EqualityEvidence::Certificate::kSlotPermutation;
    ev.detail = "slot permutation of the difference is " + pd.cycles();
    return ev;
  }

  int es = exponent_sum(d.braid);
  int modulus = options_.central_relation ? kDisks * (kDisks - 1) : 0;
  bool es_compatible = modulus == 0 ? es == 0 : es % modulus == 0;
  if (!es_compatible) {
    ev.equal = false;
    ev.decided_by = EqualityEvidence::Certificate::kExponentSum;
    ev.detail = "braid exponent sum of the difference is " + std::to_string(es) +
                (modulus ? " (not a multiple of " + std::to_string(modulus) + ")"
                         : " (nonzero)");
    return ev;
  }
  int m = modulus == 0 ? 0 : es / modulus;

  FreeAutomorphism action = artin_action(d.braid, options_.artin);
  Word conjugator = boundary_word(kDisks, m);
  if (!is_inner_by(action, conjugator)) {
    for (int i = 1; i <= kDisks; ++i) {
      Word expected = conjugator;
      expected.append(i);
      expected.append_word(conjugator, true);
      if (!(action.image(i) == expected)) {
        ev.equal = false;
        ev.decided_by = EqualityEvidence::Certificate::kArtinImage;
        ev.detail = "difference braid sends x" + std::to_string(i) + " to " +
                    action.image(i).str() + ", a full-twist power would give " + expected.str();
        return ev;
      }
    }
  }

  ev.central_power = m;
  for (int i = 0; i < kDisks; ++i) ev.residual[i] = d.framing[i] - m * kFullTwistFraming;
  ev.equal = is_zero(ev.residual);
  ev.decided_by = EqualityEvidence::Certificate::kCentralResidual;
  ev.detail = "difference is full-twist power " + std::to_string(m) + " with framing residual " +
              framing_str(ev.residual);
  return ev;
}

bool Model::equal(const ModelElement& a, const ModelElement& b) const {
  return equal_certified(a, b).equal;
}

bool Model::commutes(const ModelElement& a, const ModelElement& b) const {
  ModelElement commutator = mul(mul(mul(a, b), inv(a)), inv(b));
  return equal(commutator, identity());
}

std::optional<int> Model::element_order(const ModelElement& a, int max_k) const {
  if (max_k < 1) throw std::invalid_argument("order search bound must be >= 1");
  ModelElement acc = identity();
  for (int k = 1; k <= max_k; ++k) {
    acc = mul(acc, a);
    if (equal(acc, identity())) return k;
  }
  return std::nullopt;
}

WedgeAction Model::label_action(const ModelElement& a) const {
  Permutation pi = permutation(a.braid);
  std::array<int, kDisks> shift{};
  if (options_.transport == FramingTransport::kLeftPermutesRight) {
    for (int i = 0; i < kDisks; ++i) shift[i] = a.framing[i];
  } else {
    Framing moved = permute_forward(pi, a.framing);
    for (int i = 0; i < kDisks; ++i) shift[i] = moved[i];
  }
  return WedgeAction(std::move(pi), shift);
}

long Model::joint_invariant(const ModelElement& a) const {
  long framing_total = std::accumulate(a.framing.begin(), a.framing.end(), 0L);
  return framing_total - static_cast<long>(kDisks) * exponent_sum(a.braid);
}

CheckReport Model::verify_relations() const {
  CheckReport report;
  report.suite = "defining-relations";

  auto describe = [this](const ModelElement& x, const ModelElement& y) {
    return equal_certified(x, y).detail;
  };

  const ModelElement r = named("R");
  const ModelElement rho = named("rho");
  const ModelElement a1 = named("a1");
  const ModelElement a2 = named("a2");
  std::array<ModelElement, kDisks + 1> s{identity(), named("s1"), named("s2"), named("s3"),
                                         named("s4"), named("s5"), named("s6")};

  // (1) the unit interior rotation commutes with every half twist
  for (int i = 1; i <= kDisks; ++i)
    report.add("unit-rotation-commutes-s" + std::to_string(i), commutes(r, s[i]));

  // (2) conjugation by a1 advances the circular half-twist index
  for (int i = 1; i <= kDisks; ++i) {
    int next = i % kDisks + 1;
    ModelElement lhs = conj(a1, s[i]);
    report.add("a1-conjugates-s" + std::to_string(i) + "-to-s" + std::to_string(next),
               equal(lhs, s[next]), describe(lhs, s[next]));
  }

  // (3) the ring transport equals both circular spellings
  ModelElement ascending = mul(mul(mul(mul(s[1], s[2]), s[3]), s[4]), s[5]);
  ModelElement wrapped = mul(mul(mul(mul(s[6], s[1]), s[2]), s[3]), s[4]);
  report.add("ring-transport-ascending-product", equal(rho, ascending), describe(rho, ascending));
  report.add("ring-transport-wrapped-product", equal(rho, wrapped), describe(rho, wrapped));

  // (4) a1 decomposes as ring transport followed by five interior units
  ModelElement recomposed = mul(rho, pow(r, 5));
  report.add("a1-is-transport-with-five-units", equal(a1, recomposed),
             "framing of a1 is " + framing_str(a1.framing));

  // (5) a2 has order exactly five; the fifth power telescopes to the identity
  for (int k = 1; k <= 4; ++k)
    report.add("a2-power-" + std::to_string(k) + "-nontrivial", !equal(pow(a2, k), identity()),
               equal_certified(pow(a2, k), identity()).detail);

  auto word = [this](std::initializer_list<std::pair<const char*, int>> factors) {
    ModelElement acc = identity();
    for (const auto& [name, exp] : factors) acc = mul(acc, pow(named(name), exp));
    return acc;
  };
  std::vector<ModelElement> chain;
  chain.push_back(pow(a2, 5));
  chain.push_back(word({{"a1", 1}, {"s5", 1}, {"a1", 1}, {"s5", 1}, {"a1", 1}, {"s5", 1},
                        {"a1", 1}, {"s5", 1}, {"a1", 1}, {"s5", 1}, {"R", 5}}));
  chain.push_back(word({{"s6", 1}, {"a1", 2}, {"s5", 1}, {"a1", 1}, {"s5", 1}, {"a1", 1},
                        {"s5", 1}, {"a1", 1}, {"s5", 1}, {"R", 5}}));
  chain.push_back(word({{"s6", 1}, {"s1", 1}, {"a1", 3}, {"s5", 1}, {"a1", 1}, {"s5", 1},
                        {"a1", 1}, {"s5", 1}, {"R", 5}}));
  chain.push_back(word({{"s6", 1}, {"s1", 1}, {"s2", 1}, {"a1", 4}, {"s5", 1}, {"a1", 1},
                        {"s5", 1}, {"R", 5}}));
  chain.push_back(word({{"s6", 1}, {"s1", 1}, {"s2", 1}, {"s3", 1}, {"a1", 5}, {"s5", 1},
                        {"R", 5}}));
  chain.push_back(word({{"s6", 1}, {"s1", 1}, {"s2", 1}, {"s3", 1}, {"s4", 1}, {"a1", 5},
                        {"R", 5}}));
  chain.push_back(word({{"rho", 1}, {"a1", -1}, {"R", 5}}));
  chain.push_back(word({{"R", -5}, {"R", 5}}));
  chain.push_back(identity());
  for (std::size_t k = 1; k < chain.size(); ++k)
    report.add("a2-fifth-power-chain-" + std::to_string(k), equal(chain[k - 1], chain[k]),
               describe(chain[k - 1], chain[k]));
  report.add("a2-order-five", element_order(a2, 10) == std::optional<int>(5));

  return report;
}

}  // namespace fbraid
