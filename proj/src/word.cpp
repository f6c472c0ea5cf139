#include "fbraid/word.hpp"

#include <atomic>
#include <cstdlib>

namespace fbraid {

namespace {

std::atomic<std::size_t> g_length_cap{1'000'000};

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be >= 1");
}

}  // namespace

WordCapExceeded::WordCapExceeded(std::size_t cap)
    : std::length_error("word length cap exceeded (" + std::to_string(cap) + " letters)") {}

std::size_t Word::length_cap() { return g_length_cap.load(); }

void Word::set_length_cap(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("word length cap must be positive");
  g_length_cap.store(cap);
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::generator(int rank, int index, int sign) {
  Word w(rank);
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  if (index < 1 || index > rank) throw std::out_of_range("generator index out of range");
  w.letters_.push_back(sign * index);
  return w;
}

Word Word::reduce(int rank, const std::vector<Letter>& letters) {
  Word w(rank);
  for (const Letter& l : letters) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    w.append(l.sign * l.index);
  }
  return w;
}

Letter Word::letter(std::size_t i) const {
  std::int32_t s = letters_.at(i);
  return Letter{std::abs(s), s > 0 ? +1 : -1};
}

void Word::append(std::int32_t signed_index) {
  int index = std::abs(signed_index);
  if (index < 1 || index > rank_) throw std::out_of_range("generator index out of range");
  if (!letters_.empty() && letters_.back() == -signed_index) {
    letters_.pop_back();
    return;
  }
  if (letters_.size() >= length_cap()) throw WordCapExceeded(length_cap());
  letters_.push_back(signed_index);
}

void Word::append_word(const Word& w, bool inverted) {
  if (w.rank_ != rank_) throw std::invalid_argument("word rank mismatch");
  if (&w == this) {
    Word copy = w;
    append_word(copy, inverted);
    return;
  }
  if (!inverted) {
    for (std::int32_t s : w.letters_) append(s);
  } else {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) append(-*it);
  }
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    std::int32_t s = letters_[i];
    out += 'x';
    out += std::to_string(std::abs(s));
    if (s < 0) out += "^-1";
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("word rank mismatch");
  Word out = a;
  out.append_word(b);
  return out;
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  check_rank(rank);
  std::vector<Word> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return FreeAutomorphism(rank, std::move(images));
}

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (static_cast<int>(images_.size()) != rank)
    throw std::invalid_argument("automorphism needs one image per basis generator");
  for (const Word& w : images_)
    if (w.rank() != rank) throw std::invalid_argument("automorphism image rank mismatch");
}

const Word& FreeAutomorphism::image(int index) const {
  if (index < 1 || index > rank_) throw std::out_of_range("basis index out of range");
  return images_[static_cast<std::size_t>(index) - 1];
}

Word FreeAutomorphism::operator()(const Word& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("automorphism/word rank mismatch");
  Word out(rank_);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::int32_t s = w.signed_letter(i);
    out.append_word(images_[static_cast<std::size_t>(std::abs(s)) - 1], s < 0);
  }
  return out;
}

bool auto_equal(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("automorphism rank mismatch");
  return a == b;
}

FreeAutomorphism compose(const FreeAutomorphism& outer, const FreeAutomorphism& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("automorphism rank mismatch");
  std::vector<Word> images;
  images.reserve(outer.rank());
  for (int i = 1; i <= outer.rank(); ++i) images.push_back(outer(inner.image(i)));
  return FreeAutomorphism(outer.rank(), std::move(images));
}

bool is_inner_by(const FreeAutomorphism& phi, const Word& conjugator) {
  if (phi.rank() != conjugator.rank())
    throw std::invalid_argument("automorphism/word rank mismatch");
  for (int i = 1; i <= phi.rank(); ++i) {
    Word conj = conjugator;
    conj.append(i);
    conj.append_word(conjugator, true);
    if (!(phi.image(i) == conj)) return false;
  }
  return true;
}

}  // namespace fbraid
