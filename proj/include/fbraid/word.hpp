#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbraid {

// Thrown when a reduced word would grow past the configured length cap.
// Automorphism images can grow exponentially in the length of the braid
// word that produced them, so growth is bounded explicitly instead of
// exhausting memory.
class WordCapExceeded : public std::length_error {
 public:
  explicit WordCapExceeded(std::size_t cap);
};

// One letter of a free-group word: a generator index (1-based) and a sign.
struct Letter {
  int index = 1;
  int sign = +1;
};

// Freely reduced word over the basis x_1..x_rank of a free group.
// Letters are stored as signed generator indices; the vector never contains
// an adjacent cancelling pair, and every operation preserves that.
class Word {
 public:
  explicit Word(int rank);
  static Word generator(int rank, int index, int sign = +1);
  static Word reduce(int rank, const std::vector<Letter>& letters);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter letter(std::size_t i) const;
  std::int32_t signed_letter(std::size_t i) const { return letters_[i]; }

  // Appends one signed letter, cancelling against the current tail.
  void append(std::int32_t signed_index);
  void append_word(const Word& w, bool inverted = false);

  Word inverse() const;
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

  // Process-wide cap on reduced word length (default 10^6 letters).
  static std::size_t length_cap();
  static void set_length_cap(std::size_t cap);

 private:
  int rank_;
  std::vector<std::int32_t> letters_;
};

// Endomorphism of a rank-n free group given by the images of the basis.
// All instances built in this project come from braid actions and are
// automorphisms.
class FreeAutomorphism {
 public:
  static FreeAutomorphism identity(int rank);
  FreeAutomorphism(int rank, std::vector<Word> images);

  int rank() const { return rank_; }
  const Word& image(int index) const;  // 1-based basis index

  // Homomorphic image of w, freely reduced.
  Word operator()(const Word& w) const;

  bool operator==(const FreeAutomorphism&) const = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

// Equality of basis images; throws on rank mismatch.
bool auto_equal(const FreeAutomorphism& a, const FreeAutomorphism& b);

// compose(outer, inner)(w) == outer(inner(w)).
FreeAutomorphism compose(const FreeAutomorphism& outer, const FreeAutomorphism& inner);

// True iff phi(x_i) == c x_i c^-1 for every basis generator x_i.
bool is_inner_by(const FreeAutomorphism& phi, const Word& conjugator);

}  // namespace fbraid
