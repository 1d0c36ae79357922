#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mono/factorization.hpp"
#include "mono/monodromy_rep.hpp"

namespace mono {

// One replayable m-equivalence move.
struct Move {
  enum class Kind { Hurwitz, Conjugate, Cancel, Create };
  Kind kind = Kind::Hurwitz;
  int at = 1;                    // 1-based position (Hurwitz / Cancel / Create)
  HurwitzDirection dir = HurwitzDirection::Forward;
  int gen = 0;                   // signed generator index (Conjugate)
  Factor pair_first, pair_second;  // inserted factors (Create)
};

using MoveScript = std::vector<Move>;

// Mechanical application (no admissibility re-check for Create; soundness is
// judged by the endpoint).
BraidFactorization apply_move(const BraidFactorization& f, const Move& m);
BraidFactorization replay(const BraidFactorization& f, const MoveScript& script);

struct SearchBudget {
  long long max_states = 100000;
  int max_depth = 64;
};

struct SearchOutcome {
  bool equivalent = false;     // false means Unknown, never "inequivalent"
  MoveScript script;           // transforms the first factorization into the second
  long long states_explored = 0;
};

// Bounded bidirectional BFS over factorization states keyed by the tuple of
// canonical underlying braids and degrees. Moves: Hurwitz both directions at
// every position, pair cancellation, pair creation (only with theta), and
// global conjugation by single Artin generators. Deterministic.
SearchOutcome equivalence_search(const BraidFactorization& from, const BraidFactorization& to,
                                 const MonodromyRep* theta, const SearchBudget& budget);

}  // namespace mono
