#include <doctest.h>

#include <random>

#include "mono/monodromy_rep.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

MonodromyRep conic_rep() { return MonodromyRep(2, 2, {{1, 2}, {1, 2}}); }
MonodromyRep quartic_rep() { return MonodromyRep(4, 2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}); }

BraidFactorization conic_fact() {
  return BraidFactorization(2, {Factor(BraidWord::identity(2), 1), Factor(BraidWord::identity(2), 1)});
}

}  // namespace

TEST_CASE("evaluate") {
  MonodromyRep theta = quartic_rep();
  for (int i = 1; i <= 4; ++i) CHECK(evaluate(theta, FreeWord::generator(4, i)) == theta.image(i));
  CHECK(evaluate(theta, FreeWord::boundary(4)).is_identity());
  CHECK(evaluate(theta, FreeWord(4, {1, 2})).is_identity());
  CHECK_THROWS_AS(evaluate(theta, FreeWord::generator(3, 1)), mismatch_error);
}

TEST_CASE("validate_rep") {
  CHECK(validate_rep(quartic_rep()).pass());
  ValidationReport odd = validate_rep(MonodromyRep(3, 2, {{1, 2}, {1, 2}, {1, 2}}));
  CHECK_FALSE(odd.pass());
  CHECK_FALSE(odd.find("product_identity")->pass);
  ValidationReport intrans = validate_rep(MonodromyRep(2, 3, {{1, 2}, {1, 2}}));
  CHECK_FALSE(intrans.pass());
  CHECK_FALSE(intrans.find("transitive")->pass);
}

TEST_CASE("compatibility") {
  CHECK(check_compatibility(conic_rep(), conic_fact()).pass());

  BraidFactorization mutated = conic_fact();
  mutated.factors[0] = Factor(BraidWord::identity(2), 3);
  mutated.factors[1] = Factor(BraidWord::identity(2), -2);  // keep degree sum reasonable
  ValidationReport r = check_compatibility(conic_rep(), mutated);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.find("factor_1")->pass);  // S_2 transpositions always commute

  BraidFactorization quartic = oracle::smooth_curve_factorization(4);
  CHECK(check_compatibility(quartic_rep(), quartic).pass());
}

TEST_CASE("liftability") {
  MonodromyRep theta = quartic_rep();
  CHECK(is_liftable(theta, BraidWord::identity(4)));
  std::mt19937 rng(2718);
  // hyperelliptic case: every braid is liftable
  for (int t = 0; t < 60; ++t) CHECK(is_liftable(theta, oracle::random_word(rng, 4, 15)));

  // d=6, n=3 chain data: s1 moves g2 onto g1 with a different image
  MonodromyRep chain(6, 3, {{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}});
  CHECK(validate_rep(chain).pass());
  CHECK_FALSE(is_liftable(chain, BraidWord(6, {1})));
}

TEST_CASE("liftable braids form a subgroup closed under inverse") {
  std::mt19937 rng(1123);
  MonodromyRep chain(6, 3, {{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}});
  int seen_liftable = 0;
  for (int t = 0; t < 200; ++t) {
    BraidWord q = oracle::random_word(rng, 6, 6);
    BraidWord r = oracle::random_word(rng, 6, 6);
    if (is_liftable(chain, q)) {
      ++seen_liftable;
      CHECK(is_liftable(chain, invert(q)));
      if (is_liftable(chain, r)) CHECK(is_liftable(chain, compose(q, r)));
    }
    CHECK(is_liftable(chain, q) == is_liftable(chain, invert(q)));
  }
  CHECK(seen_liftable > 0);
}

TEST_CASE("compatibility implies liftability on generated cases") {
  std::mt19937 rng(515151);
  for (int t = 0; t < 20; ++t) {
    BraidFactorization f = oracle::random_valid_factorization(rng, 4, 12, false);
    MonodromyRep theta = quartic_rep();
    if (check_compatibility(theta, f).pass()) CHECK(liftability_of_factorization(theta, f));
  }
  CHECK(liftability_of_factorization(conic_rep(), conic_fact()));
  CHECK(liftability_of_factorization(quartic_rep(), oracle::smooth_curve_factorization(4)));
}

TEST_CASE("compatibility is invariant under hurwitz moves") {
  MonodromyRep theta = quartic_rep();
  BraidFactorization f = oracle::smooth_curve_factorization(4);
  std::mt19937 rng(90210);
  for (int t = 0; t < 25; ++t) {
    int at = std::uniform_int_distribution<int>(1, static_cast<int>(f.size()) - 1)(rng);
    f = hurwitz_move(f, at,
                     std::uniform_int_distribution<int>(0, 1)(rng) ? HurwitzDirection::Forward
                                                                   : HurwitzDirection::Backward);
    CHECK(check_compatibility(theta, f).pass());
  }
}

TEST_CASE("global conjugation companion representation") {
  std::mt19937 rng(616);
  for (int t = 0; t < 25; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int d = 2 * std::uniform_int_distribution<int>(n - 1, 5)(rng);
    MonodromyRep theta = oracle::random_rep(rng, n, d);
    REQUIRE(validate_rep(theta).pass());
    BraidWord q = oracle::random_word(rng, d, 8);
    MonodromyRep conj = conjugate_rep(theta, q);
    CHECK(validate_rep(conj).pass());
  }
  // compatibility of (theta, F) matches compatibility of (theta o Q_*, F^Q)
  MonodromyRep theta = quartic_rep();
  BraidFactorization f = oracle::smooth_curve_factorization(4);
  for (int t = 0; t < 10; ++t) {
    BraidWord q = oracle::random_word(rng, 4, 6);
    CHECK(check_compatibility(conjugate_rep(theta, q), global_conjugate(f, q)).pass() ==
          check_compatibility(theta, f).pass());
  }
}
