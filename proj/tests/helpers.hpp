#pragma once

// Test-only utilities: a naive free-group oracle kept independent of the
// library's reduction/composition path, random word generators, and the
// defining-relator list used by the quotient-soundness suites.

#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fbraid/model.hpp"
#include "fbraid/word.hpp"

namespace testutil {

struct ScopedWordCap {
  std::size_t saved;
  explicit ScopedWordCap(std::size_t cap) : saved(fbraid::Word::length_cap()) {
    fbraid::Word::set_length_cap(cap);
  }
  ~ScopedWordCap() { fbraid::Word::set_length_cap(saved); }
};

// --- naive free-group arithmetic (oracle) ---

using RawWord = std::vector<int>;  // signed generator indices

inline RawWord naive_reduce(RawWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline RawWord naive_invert(const RawWord& w) {
  RawWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline RawWord naive_concat(RawWord a, const RawWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return naive_reduce(std::move(a));
}

// images[i-1] is the raw image of x_i
inline RawWord naive_subst(const std::vector<RawWord>& images, const RawWord& w) {
  RawWord out;
  for (int s : w) {
    RawWord im = images[static_cast<std::size_t>(std::abs(s)) - 1];
    if (s < 0) im = naive_invert(im);
    out.insert(out.end(), im.begin(), im.end());
  }
  return naive_reduce(std::move(out));
}

// standard positive half-twist images on n strands
inline std::vector<RawWord> naive_half_twist_images(int n, int index, int sign) {
  std::vector<RawWord> images;
  for (int k = 1; k <= n; ++k) images.push_back(RawWord{k});
  if (sign > 0) {
    images[index - 1] = RawWord{index, index + 1, -index};
    images[index] = RawWord{index};
  } else {
    images[index - 1] = RawWord{index + 1};
    images[index] = RawWord{-(index + 1), index, index + 1};
  }
  return images;
}

// image of x_i under a braid word, substituting letters right to left
inline RawWord naive_braid_image(const fbraid::BraidWord& b, int basis_index) {
  RawWord cur{basis_index};
  for (std::size_t pos = b.size(); pos-- > 0;) {
    int s = b.signed_letter(pos);
    cur = naive_subst(naive_half_twist_images(b.strands(), std::abs(s), s > 0 ? +1 : -1), cur);
  }
  return cur;
}

inline RawWord to_raw(const fbraid::Word& w) {
  RawWord out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.signed_letter(i));
  return out;
}

inline fbraid::Word from_raw(int rank, const RawWord& w) {
  fbraid::Word out(rank);
  for (int s : w) out.append(s);
  return out;
}

// --- random generators ---

inline fbraid::Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  fbraid::Word out(rank);
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.append(sgn(rng) ? idx(rng) : -idx(rng));
  return out;
}

inline std::vector<fbraid::Letter> random_letters(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<fbraid::Letter> out;
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(fbraid::Letter{idx(rng), sgn(rng) ? 1 : -1});
  return out;
}

inline fbraid::BraidWord random_braid(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  fbraid::BraidWord out(strands);
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.append(sgn(rng) ? idx(rng) : -idx(rng));
  return out;
}

// --- named generator words and the defining relators ---

using NamedWord = std::vector<std::pair<std::string, int>>;  // (atom, +1/-1)

inline fbraid::ModelElement eval_named(const fbraid::Model& model, const NamedWord& word) {
  fbraid::ModelElement acc = model.identity();
  for (const auto& [atom, sign] : word) {
    fbraid::ModelElement g = model.named(atom);
    acc = model.mul(acc, sign > 0 ? g : model.inv(g));
  }
  return acc;
}

inline const std::vector<std::string>& named_alphabet() {
  static const std::vector<std::string> atoms = {"s1", "s2", "s3", "s4", "s5",
                                                 "s6", "R",  "rho", "a1", "a2"};
  return atoms;
}

inline NamedWord random_named_word(std::mt19937_64& rng, int max_len) {
  const auto& atoms = named_alphabet();
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  NamedWord out;
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.emplace_back(atoms[pick(rng)], sgn(rng) ? 1 : -1);
  return out;
}

// Words equal to the identity in the model; splicing one into any position
// of a word must not change the element.
inline const std::vector<NamedWord>& defining_relators() {
  static const std::vector<NamedWord> relators = [] {
    std::vector<NamedWord> out;
    auto s = [](int i) { return "s" + std::to_string((i - 1) % 6 + 1); };
    // adjacent braid relations around the circle
    for (int i = 1; i <= 6; ++i)
      out.push_back(NamedWord{{s(i), 1}, {s(i + 1), 1}, {s(i), 1},
                              {s(i + 1), -1}, {s(i), -1}, {s(i + 1), -1}});
    // far commutations (circular distance >= 2)
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 2; j <= 6; ++j) {
        if (i == 1 && j == 6) continue;  // adjacent around the circle
        out.push_back(NamedWord{{s(i), 1}, {s(j), 1}, {s(i), -1}, {s(j), -1}});
      }
    // the unit rotation is central among the generators
    for (const char* g : {"s1", "s2", "s3", "s4", "s5", "s6", "rho", "a1", "a2"})
      out.push_back(NamedWord{{"R", 1}, {g, 1}, {"R", -1}, {g, -1}});
    // definitions
    out.push_back(NamedWord{{"rho", 1}, {"s5", -1}, {"s4", -1}, {"s3", -1}, {"s2", -1},
                            {"s1", -1}});
    out.push_back(NamedWord{{"a1", 1}, {"R", -1}, {"R", -1}, {"R", -1}, {"R", -1}, {"R", -1},
                            {"rho", -1}});
    out.push_back(NamedWord{{"a2", 1}, {"R", -1}, {"s5", -1}, {"a1", -1}});
    out.push_back(NamedWord{{"s6", 1}, {"rho", 1}, {"s5", -1}, {"rho", -1}});
    // conjugation relations of the circular family
    for (int i = 1; i <= 6; ++i)
      out.push_back(NamedWord{{"a1", 1}, {s(i), 1}, {"a1", -1}, {s(i + 1), -1}});
    // the central relation, in its two spellings
    out.push_back(NamedWord(6, {"a1", 1}));
    out.push_back(NamedWord(5, {"a2", 1}));
    return out;
  }();
  return relators;
}

// Replays a failed-equality certificate through the naive substitution
// path, independently of the library's automorphism machinery.
inline bool evidence_genuinely_separates(const fbraid::Model& m, const fbraid::ModelElement& a,
                                         const fbraid::ModelElement& b,
                                         const fbraid::EqualityEvidence& ev) {
  using Certificate = fbraid::EqualityEvidence::Certificate;
  if (ev.equal) return false;
  switch (ev.decided_by) {
    case Certificate::kSlotPermutation:
      return !(fbraid::permutation(a.braid) == fbraid::permutation(b.braid));
    case Certificate::kExponentSum: {
      int modulus = m.options().central_relation ? 30 : 0;
      int diff = fbraid::exponent_sum(a.braid) - fbraid::exponent_sum(b.braid);
      return modulus == 0 ? diff != 0 : diff % modulus != 0;
    }
    case Certificate::kArtinImage: {
      fbraid::ModelElement d = m.mul(a, m.inv(b));
      int es = fbraid::exponent_sum(d.braid);
      if (es % 30 != 0) return false;  // certificate shape requires a candidate power
      RawWord boundary;
      for (int rep = 0; rep < std::abs(es / 30); ++rep)
        for (int i = 1; i <= 6; ++i) boundary.push_back(i);
      if (es < 0) boundary = naive_invert(boundary);
      for (int i = 1; i <= 6; ++i) {
        RawWord conj = naive_concat(boundary, naive_concat({i}, naive_invert(boundary)));
        if (naive_braid_image(d.braid, i) != conj) return true;
      }
      return false;
    }
    case Certificate::kCentralResidual: {
      if (!ev.central_power) return false;
      fbraid::ModelElement d = m.mul(a, m.inv(b));
      fbraid::Framing expected;
      for (int i = 0; i < 6; ++i) expected[i] = d.framing[i] - *ev.central_power * 30;
      if (expected != ev.residual) return false;
      for (int v : expected)
        if (v != 0) return true;
      return false;
    }
  }
  return false;
}

inline NamedWord apply_relation_move(std::mt19937_64& rng, NamedWord word) {
  const auto& relators = defining_relators();
  std::uniform_int_distribution<std::size_t> pick(0, relators.size() - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  NamedWord relator = relators[pick(rng)];
  if (flip(rng)) {
    NamedWord inv;
    for (auto it = relator.rbegin(); it != relator.rend(); ++it)
      inv.emplace_back(it->first, -it->second);
    relator = std::move(inv);
  }
  std::uniform_int_distribution<std::size_t> at(0, word.size());
  word.insert(word.begin() + static_cast<long>(at(rng)), relator.begin(), relator.end());
  return word;
}

}  // namespace testutil
