#include <doctest.h>

#include <random>

#include "mono/braid.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

BraidWord w(int d, std::vector<int> ls) { return BraidWord(d, std::move(ls)); }

// Random group-equality-preserving rewrite of a word.
BraidWord random_rewrite(std::mt19937& rng, const BraidWord& a) {
  const int d = a.strand_count;
  std::vector<int> ls = a.letters;
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: {  // far commutation swap
      for (int tries = 0; tries < 20; ++tries) {
        if (ls.size() < 2) break;
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, ls.size() - 2)(rng);
        int x = ls[i] < 0 ? -ls[i] : ls[i];
        int y = ls[i + 1] < 0 ? -ls[i + 1] : ls[i + 1];
        if (std::abs(x - y) >= 2) {
          std::swap(ls[i], ls[i + 1]);
          break;
        }
      }
      break;
    }
    case 1: {  // braid relation on a positive or negative triple
      for (int tries = 0; tries < 20; ++tries) {
        if (ls.size() < 3) break;
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, ls.size() - 3)(rng);
        int a0 = ls[i], a1 = ls[i + 1], a2 = ls[i + 2];
        if (a0 == a2 && std::abs(std::abs(a0) - std::abs(a1)) == 1 &&
            ((a0 > 0) == (a1 > 0))) {
          ls[i] = a1;
          ls[i + 1] = a0;
          ls[i + 2] = a1;
          break;
        }
      }
      break;
    }
    default: {  // insert a cancelling pair anywhere
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, ls.size())(rng);
      int g = std::uniform_int_distribution<int>(1, d - 1)(rng);
      int s = std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g;
      ls.insert(ls.begin() + i, {s, -s});
      break;
    }
  }
  return BraidWord(d, std::move(ls));
}

}  // namespace

TEST_CASE("compose and invert basics") {
  BraidWord s1 = w(3, {1});
  CHECK(group_equal(compose(s1, invert(s1)), BraidWord::identity(3)));
  BraidWord any = w(3, {1, -2, 2, 1});
  CHECK(compose(BraidWord::identity(3), any) == any);
  CHECK(invert(w(3, {1, 2})) == w(3, {-2, -1}));
  CHECK(invert(BraidWord::identity(3)) == BraidWord::identity(3));
  CHECK(invert(invert(any)) == any);
  CHECK_THROWS_AS(compose(w(3, {1}), w(4, {1})), mismatch_error);
}

TEST_CASE("s1 s2 has no representative shorter than 2 letters") {
  BraidWord target = w(3, {1, 2});
  CHECK(canonical_form(target).letters.size() == 2);
  std::vector<BraidWord> short_words = {BraidWord::identity(3), w(3, {1}), w(3, {-1}),
                                        w(3, {2}), w(3, {-2})};
  for (const auto& s : short_words) CHECK_FALSE(group_equal(target, s));
}

TEST_CASE("canonical form identities") {
  CHECK(canonical_form(w(3, {1, 2, 1})) == canonical_form(w(3, {2, 1, 2})));
  CHECK(canonical_form(w(4, {1, 3})) == canonical_form(w(4, {3, 1})));
  CHECK(canonical_form(w(3, {1, 2, 1, 2, 1, 2})) == canonical_form(full_twist(3)));
  // idempotent
  BraidWord x = w(4, {1, -2, 3, 3, -1, 2});
  CHECK(canonical_form(canonical_form(x)) == canonical_form(x));
}

TEST_CASE("full twist") {
  CHECK(full_twist(2) == w(2, {1, 1}));
  CHECK(group_equal(full_twist(3), w(3, {1, 2, 1, 2, 1, 2})));
  CHECK_THROWS_AS(full_twist(1), precondition_error);
  std::mt19937 rng(20240811);
  for (int d = 2; d <= 6; ++d) {
    for (int k = 0; k < 12; ++k) {
      BraidWord q = oracle::random_word(rng, d, 12);
      CHECK(group_equal(compose(full_twist(d), q), compose(q, full_twist(d))));
    }
  }
}

TEST_CASE("exponent sum") {
  for (int d = 2; d <= 8; ++d)
    CHECK(exponent_sum(full_twist(d)) == static_cast<long long>(d) * (d - 1));
  CHECK(exponent_sum(BraidWord::identity(3)) == 0);
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    BraidWord x = oracle::random_word(rng, 5, 15);
    CHECK(exponent_sum(invert(x)) == -exponent_sum(x));
    CHECK(exponent_sum(canonical_form(x)) == exponent_sum(x));
  }
}

TEST_CASE("permutation image") {
  Permutation p = permutation_image(w(2, {1}));
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(1) == 0);
  for (int d = 2; d <= 6; ++d) CHECK(permutation_image(full_twist(d)).is_identity());
  // left-to-right: (1 2) then (2 3) sends 1 -> 3, 2 -> 1, 3 -> 2
  Permutation q = permutation_image(w(3, {1, 2}));
  CHECK(q.apply(0) == 2);
  CHECK(q.apply(1) == 0);
  CHECK(q.apply(2) == 1);
  std::mt19937 rng(11);
  for (int k = 0; k < 30; ++k) {
    BraidWord x = oracle::random_word(rng, 5, 12);
    CHECK(permutation_image(canonical_form(x)) == permutation_image(x));
  }
}

TEST_CASE("canonical form is constant on rewrite classes") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 6)(rng);
    const int len = std::uniform_int_distribution<int>(0, 40)(rng);
    BraidWord a = oracle::random_word(rng, d, len);
    BraidWord b = a;
    const int rewrites = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int k = 0; k < rewrites; ++k) b = random_rewrite(rng, b);
    CHECK(canonical_form(a) == canonical_form(b));
  }
}

TEST_CASE("compose is associative up to group equality") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 5)(rng);
    BraidWord a = oracle::random_word(rng, d, 8);
    BraidWord b = oracle::random_word(rng, d, 8);
    BraidWord c = oracle::random_word(rng, d, 8);
    CHECK(group_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST_CASE("canonical form agrees with handle reduction") {
  // exhaustive small cases
  std::vector<BraidWord> words;
  for (int l0 : {-2, -1, 0, 1, 2})
    for (int l1 : {-2, -1, 0, 1, 2})
      for (int l2 : {-2, -1, 0, 1, 2}) {
        std::vector<int> ls;
        for (int l : {l0, l1, l2})
          if (l != 0) ls.push_back(l);
        words.emplace_back(3, ls);
      }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      bool garside = group_equal(words[i], words[j]);
      bool dehornoy = oracle::dehornoy_equal(words[i], words[j]);
      CHECK(garside == dehornoy);
    }
  // randomized cross-check
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 5)(rng);
    BraidWord a = oracle::random_word(rng, d, std::uniform_int_distribution<int>(0, 18)(rng));
    BraidWord b;
    if (trial % 2 == 0) {
      b = a;
      for (int k = 0; k < 4; ++k) b = random_rewrite(rng, b);
    } else {
      b = oracle::random_word(rng, d, std::uniform_int_distribution<int>(0, 18)(rng));
    }
    CHECK(group_equal(a, b) == oracle::dehornoy_equal(a, b));
  }
}

TEST_CASE("word length limit fails fast") {
  const std::size_t old = word_length_limit();
  set_word_length_limit(8);
  BraidWord a = w(3, {1, 2, 1, 2});
  CHECK_THROWS_AS(compose(a, compose(a, a)), word_limit_error);
  set_word_length_limit(old);
}

TEST_CASE("letters out of range are rejected") {
  CHECK_THROWS_AS(w(3, {3}), precondition_error);
  CHECK_THROWS_AS(w(2, {-2}), precondition_error);
  CHECK_THROWS_AS(w(0, {}), precondition_error);
}
