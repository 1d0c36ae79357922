#include <doctest.h>

#include <random>

#include "mono/cover.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

MonodromyRep hyperelliptic(int d) {
  std::vector<std::pair<int, int>> imgs(d, {1, 2});
  return MonodromyRep(d, 2, std::move(imgs));
}

}  // namespace

TEST_CASE("cover invariants for the corpus representations") {
  CoverModel conic = build_cover(hyperelliptic(2));
  CHECK(conic.genus() == 0);
  CHECK(conic.boundary_count() == 2);
  CHECK(conic.h1_rank() == 0);

  CoverModel quartic = build_cover(hyperelliptic(4));
  CHECK(quartic.genus() == 1);
  CHECK(quartic.boundary_count() == 2);
  CHECK(quartic.h1_rank() == 2);
  IMatrix j(2, 2);
  j.at(0, 1) = 1;
  j.at(1, 0) = -1;
  CHECK(quartic.intersection_form() == j);

  CoverModel chain = build_cover(MonodromyRep(6, 3, {{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}}));
  CHECK(chain.genus() == 1);
  CHECK(chain.boundary_count() == 3);
}

TEST_CASE("build_cover rejects bad input") {
  CHECK_THROWS_AS(build_cover(MonodromyRep(2, 3, {{1, 2}, {1, 2}})), precondition_error);
  CHECK_THROWS_AS(build_cover(MonodromyRep(3, 2, {{1, 2}, {1, 2}, {1, 2}})), precondition_error);
}

TEST_CASE("riemann-hurwitz on random representations") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int half = std::uniform_int_distribution<int>(n - 1, 6)(rng);
    const int d = 2 * half;
    if (d > 12) continue;
    MonodromyRep theta = oracle::random_rep(rng, n, d);
    REQUIRE(validate_rep(theta).pass());
    CoverModel c = build_cover(theta);
    CHECK(2 * c.genus() == d - 2 * n + 2);  // g = 1 - n + d/2 exactly
    CHECK(c.boundary_count() == n);
    CHECK(c.spine_vertices() - c.spine_edges() == n - d);
  }
}

TEST_CASE("lift of the identity and the full twist") {
  CoverModel c = build_cover(hyperelliptic(4));
  CHECK(lift_action(c, BraidWord::identity(4)).is_identity());
  CHECK(lift_action(c, full_twist(4)).is_identity());
  CoverModel c6 = build_cover(hyperelliptic(6));
  CHECK(lift_action(c6, full_twist(6)).is_identity());
}

TEST_CASE("lift action preserves the form, inverts, and is functorial") {
  std::mt19937 rng(246810);
  for (int d : {4, 6}) {
    CoverModel c = build_cover(hyperelliptic(d));
    const IMatrix& j = c.intersection_form();
    for (int t = 0; t < 50; ++t) {
      BraidWord q = oracle::random_word(rng, d, 10);
      BraidWord r = oracle::random_word(rng, d, 10);
      IMatrix mq = lift_action(c, q).m;
      IMatrix mr = lift_action(c, r).m;
      CHECK(mq * j * mq.transposed() == j);
      CHECK(mq.transposed() * j * mq == j);
      CHECK(lift_action(c, compose(q, r)).m == mq * mr);
      CHECK(lift_action(c, invert(q)).m * mq == IMatrix::identity(c.h1_rank()));
    }
  }
}

TEST_CASE("lift rejects non-liftable braids") {
  MonodromyRep chain(6, 3, {{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}});
  CoverModel c = build_cover(chain);
  CHECK_THROWS_AS(lift_action(c, BraidWord(6, {1})), precondition_error);
}

TEST_CASE("hyperelliptic lift matches the reduced Burau oracle at -1") {
  std::mt19937 rng(1357);
  for (int d : {4, 6}) {
    CoverModel c = build_cover(hyperelliptic(d));
    std::vector<IVec> chain;
    for (int i = 1; i < d; ++i) chain.push_back(c.homology_class(FreeWord(d, {i, -(i + 1)})));
    for (int t = 0; t < 60; ++t) {
      BraidWord q = oracle::random_word(rng, d, 12);
      IMatrix r = oracle::burau_minus_one(q);
      for (int i = 0; i < d - 1; ++i) {
        IVec lhs = c.homology_class(artin_act(FreeWord(d, {i + 1, -(i + 2)}), q));
        IVec rhs(c.h1_rank());
        for (int k = 0; k < d - 1; ++k)
          for (int x = 0; x < c.h1_rank(); ++x) rhs[x] += r.at(i, k) * chain[k][x];
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("vanishing classes") {
  CoverModel conic = build_cover(hyperelliptic(2));
  CHECK_FALSE(vanishing_class(conic, Factor(BraidWord::identity(2), 1)).has_value());

  CoverModel quartic = build_cover(hyperelliptic(4));
  auto v = vanishing_class(quartic, Factor(BraidWord::identity(4), 1));
  REQUIRE(v.has_value());
  CHECK(quartic.pair(*v, *v) == 0);
  IMatrix m = lift_action(quartic, BraidWord(4, {1})).m;
  CHECK_FALSE(m == IMatrix::identity(2));
  // primitive
  Int g = 0;
  for (const auto& x : *v) g = boost::multiprecision::gcd(g, x);
  CHECK(g == 1);
  // the transvection fixes its own class
  CHECK(mul_row(*v, m) == *v);
  // and acts as x -> x + <x,v> v on the whole lattice
  for (int i = 0; i < 2; ++i) {
    IVec e(2);
    e[i] = 1;
    IVec image = mul_row(e, m);
    IVec expect = e;
    Int coeff = quartic.pair(e, *v);
    for (int k = 0; k < 2; ++k) expect[k] += coeff * (*v)[k];
    CHECK(image == expect);
  }

  CHECK_THROWS_AS(vanishing_class(quartic, Factor(BraidWord::identity(4), 2)), precondition_error);
  MonodromyRep chain(6, 3, {{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}});
  CoverModel cc = build_cover(chain);
  CHECK_THROWS_AS(vanishing_class(cc, Factor(BraidWord::identity(6), 1)), precondition_error);
}

TEST_CASE("transvection identity holds for every tangency factor in the corpus") {
  CoverModel quartic = build_cover(hyperelliptic(4));
  BraidFactorization f = oracle::smooth_curve_factorization(4);
  for (const auto& fac : f.factors) {
    auto v = vanishing_class(quartic, fac);
    REQUIRE(v.has_value());
    CHECK(quartic.pair(*v, *v) == 0);
  }
}

TEST_CASE("pencil monodromy check on the quartic double plane") {
  CoverModel c = build_cover(hyperelliptic(4));
  BraidFactorization f = oracle::smooth_curve_factorization(4);
  ValidationReport rep = pencil_monodromy_check(c, f);
  CHECK(rep.pass());

  // product of the 12 transvections equals the lift of the full twist
  IMatrix prod = IMatrix::identity(2);
  for (const auto& fac : f.factors) prod = prod * lift_action(c, underlying_braid(fac)).m;
  CHECK(prod == lift_action(c, full_twist(4)).m);

  // mutating one factor by an extra conjugation breaks the product check only
  BraidFactorization bad = f;
  bad.factors[4] = Factor(compose(bad.factors[4].conjugator, BraidWord(4, {1})), 1);
  ValidationReport brep = pencil_monodromy_check(c, bad);
  CHECK_FALSE(brep.pass());
  CHECK(brep.find("compatibility")->pass);
  CHECK(brep.find("kernel_factors")->pass);
  CHECK_FALSE(brep.find("product_full_twist_lift")->pass);
  CHECK(brep.find("tangency_transvections")->pass);
}

TEST_CASE("boundary classes vanish in the capped homology") {
  for (int d : {4, 6}) {
    CoverModel c = build_cover(hyperelliptic(d));
    IVec b = c.homology_class(FreeWord::boundary(d));
    for (const auto& x : b) CHECK(x == 0);
  }
}

TEST_CASE("compatible node and cusp factors lift to the identity") {
  // node with disjoint transposition images: d = 8, n = 4, genus 1
  MonodromyRep four(8, 4, {{1, 2}, {1, 2}, {3, 4}, {3, 4}, {1, 3}, {1, 3}, {2, 4}, {2, 4}});
  REQUIRE(validate_rep(four).pass());
  CoverModel c4 = build_cover(four);
  CHECK(c4.genus() == 1);
  for (int deg : {2, -2}) {
    Factor node(BraidWord(8, {2}), deg);  // images (1 2) and (3 4): disjoint
    Permutation a = evaluate(four, artin_act(FreeWord::generator(8, 1), node.conjugator));
    Permutation b = evaluate(four, artin_act(FreeWord::generator(8, 2), node.conjugator));
    REQUIRE(transpositions_disjoint(a, b));
    CHECK(is_liftable(four, underlying_braid(node)));
    CHECK(lift_action(c4, underlying_braid(node)).is_identity());
  }

  // cusp with linked transposition images: d = 6, n = 3, genus 1
  MonodromyRep three(6, 3, {{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}});
  CoverModel c3 = build_cover(three);
  Factor cusp(BraidWord::identity(6), 3);  // images (1 2) and (2 3): linked
  CHECK(is_liftable(three, underlying_braid(cusp)));
  CHECK(lift_action(c3, underlying_braid(cusp)).is_identity());

  // an incompatible node (hyperelliptic cover) is NOT in the kernel
  CoverModel hyper = build_cover(hyperelliptic(4));
  CHECK_FALSE(lift_action(hyper, underlying_braid(Factor(BraidWord::identity(4), 2))).is_identity());
}
