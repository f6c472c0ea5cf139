#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbraid/word.hpp"

namespace fbraid {

// Which of the two standard free-group actions a positive half twist uses.
// kStandard:  s_i sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i.
// kMirrored:  the inverse assignment (x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}).
// The default is pinned by the relation suite; see detect_central_power.
enum class ArtinConvention { kStandard, kMirrored };

class Permutation {
 public:
  explicit Permutation(int size);  // identity
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(image_.size()); }
  int apply(int i) const;  // 1-based

  // Function composition: (this.after(inner))(i) == this(inner(i)).
  Permutation after(const Permutation& inner) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::string cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// Formal word in the half-twist generators s_1..s_{n-1} of the braid group
// on n strands. Adjacent inverse pairs cancel on append; no other
// normalization is performed. Equality of the group elements behind two
// words is decided by braid_equal, not by operator==.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  static BraidWord generator(int strands, int index, int sign = +1);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  std::int32_t signed_letter(std::size_t i) const { return letters_[i]; }

  void append(std::int32_t signed_index);
  BraidWord inverse() const;
  BraidWord pow(int k) const;
  std::string str() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<std::int32_t> letters_;
};

// The free-group action of a braid word. Concatenation of words maps to
// composition of actions: artin_action(a*b) == compose(artin_action(a),
// artin_action(b)). The representation is faithful, which makes it the
// equality oracle for everything downstream.
FreeAutomorphism artin_action(const BraidWord& b,
                              ArtinConvention convention = ArtinConvention::kStandard);

// Quotient to the symmetric group: s_i -> (i, i+1), words composed like
// functions (first letter acts last).
Permutation permutation(const BraidWord& b);

// Abelianization: sum of letter signs.
int exponent_sum(const BraidWord& b);

// The ascending product s_1 s_2 ... s_{n-1}. Conjugation by it advances the
// generator index by one, and its n-th power generates the center.
BraidWord delta(int strands);

// The circular family on six strands: indices 1..5 are the primitive
// letters, index 6 is the wrapped twist delta * s_5 * delta^-1.
BraidWord sigma_circular(int index);

// Certificate attached to a braid equality decision: when two words differ,
// one of the listed homomorphic invariants witnesses it.
struct BraidEvidence {
  enum class Kind { kEqual, kPermutation, kExponentSum, kBasisImage };
  Kind kind = Kind::kEqual;
  int generator_index = 0;  // set for kBasisImage
  std::string lhs;
  std::string rhs;
};

bool braid_equal(const BraidWord& a, const BraidWord& b,
                 ArtinConvention convention = ArtinConvention::kStandard);
BraidEvidence braid_equal_certified(const BraidWord& a, const BraidWord& b,
                                    ArtinConvention convention = ArtinConvention::kStandard);

// (x_1 x_2 ... x_rank)^power as a reduced word.
Word boundary_word(int rank, int power);

// Returns m iff b equals the m-th power of the full twist, i.e. iff its
// action is conjugation by boundary_word(n, m). The candidate m is
// exponent_sum(b) / (n(n-1)); identity permutation is required first.
std::optional<int> detect_central_power(const BraidWord& b,
                                        ArtinConvention convention = ArtinConvention::kStandard);

}  // namespace fbraid
