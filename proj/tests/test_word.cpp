#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fbraid/word.hpp"
#include "helpers.hpp"

using namespace fbraid;
using testutil::RawWord;

namespace {

Word w(int rank, std::initializer_list<int> letters) {
  Word out(rank);
  for (int s : letters) out.append(s);
  return out;
}

FreeAutomorphism half_twist_auto(int rank, int index) {
  std::vector<Word> images;
  for (int k = 1; k <= rank; ++k) {
    if (k == index)
      images.push_back(w(rank, {index, index + 1, -index}));
    else if (k == index + 1)
      images.push_back(Word::generator(rank, index));
    else
      images.push_back(Word::generator(rank, k));
  }
  return FreeAutomorphism(rank, std::move(images));
}

}  // namespace

TEST_CASE("reduction cancels adjacent inverse pairs") {
  CHECK(Word::reduce(3, {{1, 1}, {2, 1}, {2, -1}, {3, 1}}) == w(3, {1, 3}));
  CHECK(Word::reduce(1, {{1, 1}, {1, -1}}) == Word(1));
  CHECK(Word::reduce(2, {{2, -1}, {2, -1}}) == w(2, {-2, -2}));
}

TEST_CASE("reduction rejects bad letters") {
  CHECK_THROWS_AS(Word::reduce(2, {{3, 1}}), std::out_of_range);
  CHECK_THROWS_AS(Word::reduce(2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Word::generator(2, 0), std::out_of_range);
}

TEST_CASE("reduction is idempotent and matches the naive oracle") {
  std::mt19937_64 rng(20260801);
  for (int trial = 0; trial < 200; ++trial) {
    auto letters = testutil::random_letters(rng, 4, 200);
    Word reduced = Word::reduce(4, letters);
    RawWord raw;
    for (const Letter& l : letters) raw.push_back(l.sign * l.index);
    CHECK(testutil::to_raw(reduced) == testutil::naive_reduce(raw));
    // idempotent
    std::vector<Letter> again;
    for (std::size_t i = 0; i < reduced.size(); ++i) again.push_back(reduced.letter(i));
    CHECK(Word::reduce(4, again) == reduced);
  }
}

TEST_CASE("group laws on random reduced words") {
  std::mt19937_64 rng(20260802);
  Word empty(5);
  for (int trial = 0; trial < 100; ++trial) {
    Word a = testutil::random_word(rng, 5, 50);
    Word b = testutil::random_word(rng, 5, 50);
    Word c = testutil::random_word(rng, 5, 50);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * empty == a);
    CHECK(empty * a == a);
    CHECK(a * a.inverse() == empty);
    CHECK(a.inverse() * a == empty);
  }
}

TEST_CASE("multiplication examples") {
  CHECK(w(3, {1, 2}) * w(3, {-2, 3}) == w(3, {1, 3}));
  CHECK(w(2, {1}) * w(2, {-1}) == Word(2));
  CHECK_THROWS_AS(Word(2) * Word(3), std::invalid_argument);
}

TEST_CASE("inversion examples") {
  CHECK(w(2, {1, 2}).inverse() == w(2, {-2, -1}));
  CHECK(Word(2).inverse() == Word(2));
  CHECK(w(3, {-3}).inverse() == w(3, {3}));
}

TEST_CASE("length cap aborts runaway growth") {
  testutil::ScopedWordCap cap(8);
  Word a = w(3, {1, 2, 1, 2, 1, 2, 1, 2});
  CHECK_THROWS_AS(a * a, WordCapExceeded);
}

TEST_CASE("apply is homomorphic and matches hand expansion") {
  int rank = 2;
  // x1 -> x1 x2 x1^-1, x2 -> x1
  FreeAutomorphism phi(rank, {w(rank, {1, 2, -1}), Word::generator(rank, 1)});
  CHECK(phi(w(rank, {1, 2})) == w(rank, {1, 2}));  // x1 x2 x1^-1 x1 reduces back
  CHECK(phi(Word(rank)) == Word(rank));
  FreeAutomorphism id = FreeAutomorphism::identity(rank);
  CHECK(id(w(rank, {1, -2, 1})) == w(rank, {1, -2, 1}));

  std::mt19937_64 rng(20260803);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = testutil::random_word(rng, rank, 30);
    Word v = testutil::random_word(rng, rank, 30);
    CHECK(phi(u * v) == phi(u) * phi(v));
    // against the naive substitution path
    std::vector<RawWord> raw_images = {{1, 2, -1}, {1}};
    CHECK(testutil::to_raw(phi(u)) == testutil::naive_subst(raw_images, testutil::to_raw(u)));
  }
}

TEST_CASE("compose order convention") {
  int rank = 3;
  FreeAutomorphism id = FreeAutomorphism::identity(rank);
  FreeAutomorphism s1 = half_twist_auto(rank, 1);
  FreeAutomorphism s2 = half_twist_auto(rank, 2);
  CHECK(auto_equal(compose(s1, id), s1));
  CHECK(auto_equal(compose(id, s2), s2));

  // compose(phi, psi)(w) == phi(psi(w))
  std::mt19937_64 rng(20260804);
  for (int trial = 0; trial < 50; ++trial) {
    Word u = testutil::random_word(rng, rank, 20);
    CHECK(compose(s1, s2)(u) == s1(s2(u)));
  }

  // the braid relation holds under composition
  FreeAutomorphism lhs = compose(compose(s1, s2), s1);
  FreeAutomorphism rhs = compose(compose(s2, s1), s2);
  CHECK(auto_equal(lhs, rhs));
  CHECK_FALSE(auto_equal(s1, s2));
  CHECK(auto_equal(id, id));
}

TEST_CASE("compose is associative on random generator compositions") {
  int rank = 6;
  std::vector<FreeAutomorphism> gens;
  for (int i = 1; i <= 5; ++i) gens.push_back(half_twist_auto(rank, i));
  std::mt19937_64 rng(20260805);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    FreeAutomorphism a = gens[pick(rng)], b = gens[pick(rng)], c = gens[pick(rng)];
    for (int depth = 0; depth < 5; ++depth) a = compose(a, gens[pick(rng)]);
    CHECK(auto_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST_CASE("inner automorphism detection") {
  int rank = 3;
  FreeAutomorphism id = FreeAutomorphism::identity(rank);
  CHECK(is_inner_by(id, Word(rank)));

  Word c = w(rank, {1});
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    Word conj = c;
    conj.append(i);
    conj.append_word(c, true);
    images.push_back(conj);
  }
  FreeAutomorphism conj_by_x1(rank, images);
  CHECK(is_inner_by(conj_by_x1, c));
  CHECK_FALSE(is_inner_by(conj_by_x1, w(rank, {2})));

  FreeAutomorphism s1 = half_twist_auto(rank, 1);
  CHECK_FALSE(is_inner_by(s1, Word(rank)));
  CHECK_FALSE(is_inner_by(s1, w(rank, {1})));
  CHECK_FALSE(is_inner_by(s1, w(rank, {2, -1})));
}
