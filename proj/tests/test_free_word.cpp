#include <doctest.h>

#include <random>

#include "mono/free_word.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

FreeWord fw(int r, std::vector<int> ls) { return FreeWord(r, std::move(ls)); }

FreeWord random_free(std::mt19937& rng, int r, int len) {
  std::uniform_int_distribution<int> gen(1, r);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> ls;
  for (int k = 0; k < len; ++k) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord(r, std::move(ls));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(fw(3, {1, 2, -2}) == fw(3, {1}));
  CHECK(fw(3, {}) == FreeWord::identity(3));
  CHECK(fw(3, {1, -1, 2, -2}).letters.empty());
  CHECK(free_reduce(fw(3, {1, 2, -2, -1})).letters.empty());
  FreeWord x = fw(4, {1, 2, -3, 3, -2, 4});
  CHECK(free_reduce(x) == x);  // idempotent on reduced words
}

TEST_CASE("artin action on generators") {
  // g1 * s1 = g1 g2 g1^-1
  CHECK(artin_act(fw(2, {1}), BraidWord(2, {1})) == fw(2, {1, 2, -1}));
  CHECK(artin_act(fw(2, {2}), BraidWord(2, {1})) == fw(2, {1}));
  CHECK(artin_act(fw(2, {1}), BraidWord(2, {-1})) == fw(2, {2}));
  CHECK(artin_act(fw(2, {2}), BraidWord(2, {-1})) == fw(2, {-2, 1, 2}));
  CHECK(artin_act(fw(3, {3}), BraidWord(3, {1})) == fw(3, {3}));
  CHECK_THROWS_AS(artin_act(fw(3, {1}), BraidWord(4, {1})), mismatch_error);
}

TEST_CASE("boundary loop is fixed letter-for-letter") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 6)(rng);
    BraidWord q = oracle::random_word(rng, d, std::uniform_int_distribution<int>(0, 25)(rng));
    CHECK(artin_act(FreeWord::boundary(d), q) == FreeWord::boundary(d));
  }
}

TEST_CASE("action laws") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 6)(rng);
    BraidWord q = oracle::random_word(rng, d, 10);
    BraidWord r = oracle::random_word(rng, d, 10);
    FreeWord x = random_free(rng, d, 8);
    CHECK(artin_act(x, compose(q, r)) == artin_act(artin_act(x, q), r));
    CHECK(artin_act(artin_act(x, q), invert(q)) == x);
    CHECK(artin_act(x, compose(q, invert(q))) == x);
  }
}

TEST_CASE("action is an automorphism") {
  CHECK(act_is_automorphism_check(BraidWord(3, {1})));
  CHECK(act_is_automorphism_check(BraidWord(3, {2})));
  std::mt19937 rng(32123);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 6)(rng);
    CHECK(act_is_automorphism_check(oracle::random_word(rng, d, 12)));
  }
}

TEST_CASE("each generator maps to a conjugate tracked by the strand permutation") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 6)(rng);
    BraidWord q = oracle::random_word(rng, d, 12);
    Permutation p = permutation_image(q);
    for (int i = 1; i <= d; ++i) {
      FreeWord img = artin_act(FreeWord::generator(d, i), q);
      // img must be w g_j w^{-1} with j = p(i)
      const int j = p.apply(i - 1) + 1;
      REQUIRE(img.letters.size() % 2 == 1);
      const std::size_t mid = img.letters.size() / 2;
      CHECK(img.letters[mid] == j);
      for (std::size_t k = 0; k < mid; ++k)
        CHECK(img.letters[k] == -img.letters[img.letters.size() - 1 - k]);
    }
  }
}
