#pragma once

#include <utility>
#include <vector>

#include "mono/braid.hpp"
#include "mono/factorization.hpp"
#include "mono/free_word.hpp"
#include "mono/report.hpp"

namespace mono {

// Geometric monodromy representation theta: F_d -> S_n, each geometric
// generator mapped to a transposition, product of images the identity,
// images generating a transitive (hence full) subgroup of S_n.
struct MonodromyRep {
  int d = 0;  // number of geometric generators
  int n = 0;  // covering degree
  std::vector<std::pair<int, int>> images;  // 1-based pairs {a,b}, a < b

  MonodromyRep() = default;
  MonodromyRep(int d_, int n_, std::vector<std::pair<int, int>> imgs);

  Permutation image(int i) const;  // 1-based generator index
};

Permutation evaluate(const MonodromyRep& theta, const FreeWord& w);

ValidationReport validate_rep(const MonodromyRep& theta);

// Def-3.4-style per-factor clauses: tangency factors need equal images,
// node factors distinct commuting (disjoint) ones, cusp factors
// non-commuting ones (supports sharing exactly one point).
ValidationReport check_compatibility(const MonodromyRep& theta, const BraidFactorization& f);

bool is_liftable(const MonodromyRep& theta, const BraidWord& q);
bool liftability_of_factorization(const MonodromyRep& theta, const BraidFactorization& f);

// theta o Q_*: the representation after a global conjugation by q.
MonodromyRep conjugate_rep(const MonodromyRep& theta, const BraidWord& q);

bool is_transposition(const Permutation& p);
bool transpositions_disjoint(const Permutation& a, const Permutation& b);
// Supports share exactly one point.
bool transpositions_linked(const Permutation& a, const Permutation& b);

}  // namespace mono
