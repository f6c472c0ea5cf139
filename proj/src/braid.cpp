#include "fbraid/braid.hpp"

#include <algorithm>
#include <cstdlib>

namespace fbraid {

Permutation::Permutation(int size) {
  if (size < 1) throw std::invalid_argument("permutation size must be >= 1");
  image_.resize(size);
  for (int i = 0; i < size; ++i) image_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  int n = static_cast<int>(image_.size());
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<bool> seen(n, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("image is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int size) { return Permutation(size); }

Permutation Permutation::transposition(int size, int a, int b) {
  Permutation p(size);
  if (a < 1 || a > size || b < 1 || b > size) throw std::out_of_range("transposition out of range");
  std::swap(p.image_[a - 1], p.image_[b - 1]);
  return p;
}

int Permutation::apply(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("permutation argument out of range");
  return image_[i - 1];
}

Permutation Permutation::after(const Permutation& inner) const {
  if (size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> image(image_.size());
  for (int i = 1; i <= size(); ++i) image[i - 1] = apply(inner.apply(i));
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (int i = 1; i <= size(); ++i) image[image_[i - 1] - 1] = i;
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image_[i - 1] != i) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::vector<bool> seen(image_.size(), false);
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1] || image_[i - 1] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = image_[j - 1];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  BraidWord b(strands);
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  if (index < 1 || index >= strands) throw std::out_of_range("braid generator index out of range");
  b.letters_.push_back(sign * index);
  return b;
}

void BraidWord::append(std::int32_t signed_index) {
  int index = std::abs(signed_index);
  if (index < 1 || index >= strands_) throw std::out_of_range("braid generator index out of range");
  if (!letters_.empty() && letters_.back() == -signed_index) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(signed_index);
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord out(strands_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    std::int32_t s = letters_[i];
    out += 's';
    out += std::to_string(std::abs(s));
    if (s < 0) out += "^-1";
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw std::invalid_argument("braid strand count mismatch");
  BraidWord out = a;
  for (std::int32_t s : b.letters_) out.append(s);
  return out;
}

namespace {

// Action of a single signed letter under the given convention.
FreeAutomorphism letter_action(int strands, std::int32_t signed_index, ArtinConvention conv) {
  int i = std::abs(signed_index);
  bool positive = signed_index > 0;
  if (conv == ArtinConvention::kMirrored) positive = !positive;
  std::vector<Word> images;
  images.reserve(strands);
  for (int k = 1; k <= strands; ++k) {
    if (k == i) {
      if (positive) {
        Word w = Word::generator(strands, i);
        w.append(i + 1);
        w.append(-i);
        images.push_back(std::move(w));  // x_i x_{i+1} x_i^-1
      } else {
        images.push_back(Word::generator(strands, i + 1));
      }
    } else if (k == i + 1) {
      if (positive) {
        images.push_back(Word::generator(strands, i));
      } else {
        Word w = Word::generator(strands, i + 1, -1);
        w.append(i);
        w.append(i + 1);
        images.push_back(std::move(w));  // x_{i+1}^-1 x_i x_{i+1}
      }
    } else {
      images.push_back(Word::generator(strands, k));
    }
  }
  return FreeAutomorphism(strands, std::move(images));
}

}  // namespace

FreeAutomorphism artin_action(const BraidWord& b, ArtinConvention convention) {
  FreeAutomorphism acc = FreeAutomorphism::identity(b.strands());
  for (std::size_t i = 0; i < b.size(); ++i)
    acc = compose(acc, letter_action(b.strands(), b.signed_letter(i), convention));
  return acc;
}

Permutation permutation(const BraidWord& b) {
  Permutation acc = Permutation::identity(b.strands());
  for (std::size_t i = 0; i < b.size(); ++i) {
    int k = std::abs(b.signed_letter(i));
    acc = acc.after(Permutation::transposition(b.strands(), k, k + 1));
  }
  return acc;
}

int exponent_sum(const BraidWord& b) {
  int sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) sum += b.signed_letter(i) > 0 ? 1 : -1;
  return sum;
}

BraidWord delta(int strands) {
  BraidWord out(strands);
  for (int i = 1; i < strands; ++i) out.append(i);
  return out;
}

BraidWord sigma_circular(int index) {
  constexpr int kStrands = 6;
  if (index < 1 || index > kStrands) throw std::out_of_range("circular twist index out of 1..6");
  if (index < kStrands) return BraidWord::generator(kStrands, index);
  BraidWord d = delta(kStrands);
  return d * BraidWord::generator(kStrands, kStrands - 1) * d.inverse();
}

BraidEvidence braid_equal_certified(const BraidWord& a, const BraidWord& b,
                                    ArtinConvention convention) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braid strand count mismatch");
  Permutation pa = permutation(a), pb = permutation(b);
  if (!(pa == pb))
    return BraidEvidence{BraidEvidence::Kind::kPermutation, 0, pa.cycles(), pb.cycles()};
  int ea = exponent_sum(a), eb = exponent_sum(b);
  if (ea != eb)
    return BraidEvidence{BraidEvidence::Kind::kExponentSum, 0, std::to_string(ea),
                         std::to_string(eb)};
  FreeAutomorphism fa = artin_action(a, convention), fb = artin_action(b, convention);
  for (int i = 1; i <= a.strands(); ++i)
    if (!(fa.image(i) == fb.image(i)))
      return BraidEvidence{BraidEvidence::Kind::kBasisImage, i, fa.image(i).str(),
                           fb.image(i).str()};
  return BraidEvidence{};
}

bool braid_equal(const BraidWord& a, const BraidWord& b, ArtinConvention convention) {
  return braid_equal_certified(a, b, convention).kind == BraidEvidence::Kind::kEqual;
}

Word boundary_word(int rank, int power) {
  Word out(rank);
  for (int rep = 0; rep < std::abs(power); ++rep) {
    if (power > 0)
      for (int i = 1; i <= rank; ++i) out.append(i);
    else
      for (int i = rank; i >= 1; --i) out.append(-i);
  }
  return out;
}

std::optional<int> detect_central_power(const BraidWord& b, ArtinConvention convention) {
  int n = b.strands();
  if (!permutation(b).is_identity()) return std::nullopt;
  int es = exponent_sum(b);
  int divisor = n * (n - 1);
  if (es % divisor != 0) return std::nullopt;
  int m = es / divisor;
  if (is_inner_by(artin_action(b, convention), boundary_word(n, m))) return m;
  return std::nullopt;
}

}  // namespace fbraid
