#pragma once

#include <string>
#include <vector>

#include "mono/braid.hpp"
#include "mono/report.hpp"

namespace mono {

struct MonodromyRep;  // monodromy_rep.hpp

// One factor Q^{-1} X_1^r Q of a braid factorization. The degree encodes the
// special-point type: 1 tangency, +-2 node, 3 cusp (-3 only behind the
// factorization's allow_negative_cusps flag).
struct Factor {
  BraidWord conjugator;
  int degree = 1;

  Factor() = default;
  Factor(BraidWord q, int r);
};

BraidWord underlying_braid(const Factor& f);

struct BraidFactorization {
  int strand_count = 2;
  bool allow_negative_cusps = false;
  std::vector<Factor> factors;

  BraidFactorization() = default;
  BraidFactorization(int d, std::vector<Factor> fs, bool allow_neg_cusps = false);

  std::size_t size() const { return factors.size(); }
  int tangency_count() const;
};

// Census keys: tangency, node_pos, node_neg, cusp, cusp_neg.
ValidationReport validate(const BraidFactorization& f);

// Hurwitz move at 1-based position i (swaps factors i, i+1).
enum class HurwitzDirection { Forward, Backward };
BraidFactorization hurwitz_move(const BraidFactorization& f, int i, HurwitzDirection dir);

BraidFactorization global_conjugate(const BraidFactorization& f, const BraidWord& q);

// Removes factors i, i+1 (1-based); they must be a cancellable node pair.
BraidFactorization cancel_pair(const BraidFactorization& f, int i);

// Inserts the pair (q,-2),(q,+2) before 1-based position i (i in 1..size+1);
// admissible only if theta maps g_1*q, g_2*q to disjoint transpositions.
BraidFactorization create_pair(const BraidFactorization& f, int i, const BraidWord& q,
                               const MonodromyRep& theta);

// Canonicalizes every conjugator word (the underlying braids are unchanged).
BraidFactorization normalize_factorization(const BraidFactorization& f);

// Deterministic state key: canonical form of each underlying braid plus its
// degree. Two factorizations with equal keys are equal factor-by-factor in
// the sense of the factor-equality convention.
std::string factorization_key(const BraidFactorization& f);

}  // namespace mono
