#include "mono/search.hpp"

#include <deque>
#include <unordered_map>

namespace mono {

BraidFactorization apply_move(const BraidFactorization& f, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Hurwitz:
      return hurwitz_move(f, m.at, m.dir);
    case Move::Kind::Conjugate: {
      const int g = m.gen;
      return global_conjugate(f, BraidWord::generator(f.strand_count, g < 0 ? -g : g, g));
    }
    case Move::Kind::Cancel:
      return cancel_pair(f, m.at);
    case Move::Kind::Create: {
      if (m.at < 1 || static_cast<std::size_t>(m.at) > f.factors.size() + 1)
        throw precondition_error("create position out of range");
      BraidFactorization r = f;
      r.factors.insert(r.factors.begin() + (m.at - 1), {m.pair_first, m.pair_second});
      return r;
    }
  }
  throw error("unreachable");
}

BraidFactorization replay(const BraidFactorization& f, const MoveScript& script) {
  BraidFactorization cur = f;
  for (const Move& m : script) cur = apply_move(cur, m);
  return cur;
}

namespace {

Move inverted(const Move& m, const BraidFactorization& before_state) {
  Move r = m;
  switch (m.kind) {
    case Move::Kind::Hurwitz:
      r.dir = m.dir == HurwitzDirection::Forward ? HurwitzDirection::Backward
                                                 : HurwitzDirection::Forward;
      return r;
    case Move::Kind::Conjugate:
      r.gen = -m.gen;
      return r;
    case Move::Kind::Cancel:
      // undo by re-inserting the removed pair
      r.kind = Move::Kind::Create;
      r.pair_first = before_state.factors[m.at - 1];
      r.pair_second = before_state.factors[m.at];
      return r;
    case Move::Kind::Create:
      r.kind = Move::Kind::Cancel;
      return r;
  }
  throw error("unreachable");
}

struct Node {
  BraidFactorization state;
  int parent = -1;
  Move via;       // move applied to parent to reach this node
  int depth = 0;
};

// All successor moves of a state, in a fixed deterministic order.
std::vector<Move> successor_moves(const BraidFactorization& f, const MonodromyRep* theta) {
  std::vector<Move> out;
  const int k = static_cast<int>(f.factors.size());
  for (int i = 1; i < k; ++i)
    out.push_back({Move::Kind::Hurwitz, i, HurwitzDirection::Forward, 0, {}, {}});
  for (int i = 1; i < k; ++i)
    out.push_back({Move::Kind::Hurwitz, i, HurwitzDirection::Backward, 0, {}, {}});
  for (int i = 1; i < k; ++i) {
    const Factor& a = f.factors[i - 1];
    const Factor& b = f.factors[i];
    if (!((a.degree == 2 && b.degree == -2) || (a.degree == -2 && b.degree == 2))) continue;
    if (!group_equal(underlying_braid(a), invert(underlying_braid(b)))) continue;
    out.push_back({Move::Kind::Cancel, i, HurwitzDirection::Forward, 0, {}, {}});
  }
  for (int g = 1; g < f.strand_count; ++g)
    out.push_back({Move::Kind::Conjugate, 1, HurwitzDirection::Forward, g, {}, {}});
  for (int g = 1; g < f.strand_count; ++g)
    out.push_back({Move::Kind::Conjugate, 1, HurwitzDirection::Forward, -g, {}, {}});

  if (theta) {
    // Candidate conjugators: the identity plus the conjugators already in
    // the state, deduplicated by canonical form.
    std::vector<BraidWord> cands = {BraidWord::identity(f.strand_count)};
    std::vector<std::string> keys = {normal_form(cands[0]).key()};
    for (const auto& fac : f.factors) {
      std::string key = normal_form(fac.conjugator).key();
      bool seen = false;
      for (const auto& s : keys) seen = seen || s == key;
      if (!seen) {
        cands.push_back(fac.conjugator);
        keys.push_back(key);
      }
    }
    const FreeWord g1 = FreeWord::generator(f.strand_count, 1);
    const FreeWord g2 = FreeWord::generator(f.strand_count, 2);
    for (const auto& q : cands) {
      if (theta->d != f.strand_count) break;
      Permutation a = evaluate(*theta, artin_act(g1, q));
      Permutation b = evaluate(*theta, artin_act(g2, q));
      if (!transpositions_disjoint(a, b)) continue;
      for (int i = 1; i <= k + 1; ++i)
        out.push_back({Move::Kind::Create, i, HurwitzDirection::Forward, 0, Factor(q, -2),
                       Factor(q, 2)});
    }
  }
  return out;
}

}  // namespace

SearchOutcome equivalence_search(const BraidFactorization& from, const BraidFactorization& to,
                                 const MonodromyRep* theta, const SearchBudget& budget) {
  if (from.strand_count != to.strand_count)
    throw mismatch_error("factorizations have different braid indices");
  if (budget.max_states <= 0 || budget.max_depth < 0)
    throw precondition_error("malformed search budget");

  SearchOutcome outcome;
  const std::string target_key = factorization_key(to);
  const std::string start_key = factorization_key(from);
  if (start_key == target_key) {
    outcome.equivalent = true;
    return outcome;
  }

  // side 0 grows from `from`, side 1 from `to`; meet in the middle.
  std::vector<Node> nodes[2];
  std::unordered_map<std::string, int> seen[2];
  std::deque<int> queue[2];
  nodes[0].push_back({from, -1, {}, 0});
  nodes[1].push_back({to, -1, {}, 0});
  seen[0][start_key] = 0;
  seen[1][target_key] = 0;
  queue[0].push_back(0);
  queue[1].push_back(0);

  auto assemble = [&](int meet_forward, int meet_backward) {
    MoveScript script;
    {
      std::vector<Move> rev;
      for (int n = meet_forward; nodes[0][n].parent >= 0; n = nodes[0][n].parent)
        rev.push_back(nodes[0][n].via);
      script.assign(rev.rbegin(), rev.rend());
    }
    for (int n = meet_backward; nodes[1][n].parent >= 0; n = nodes[1][n].parent)
      script.push_back(inverted(nodes[1][n].via, nodes[1][nodes[1][n].parent].state));
    outcome.equivalent = true;
    outcome.script = std::move(script);
  };

  long long explored = 0;
  while (!queue[0].empty() || !queue[1].empty()) {
    // Expand the smaller frontier first; ties expand side 0.
    const int side = (queue[1].empty() || (!queue[0].empty() && queue[0].size() <= queue[1].size()))
                         ? 0
                         : 1;
    const int cur = queue[side].front();
    queue[side].pop_front();
    if (nodes[side][cur].depth >= budget.max_depth) continue;

    const BraidFactorization state = nodes[side][cur].state;
    for (const Move& m : successor_moves(state, theta)) {
      if (++explored > budget.max_states) {
        outcome.states_explored = explored - 1;
        return outcome;  // Unknown
      }
      BraidFactorization next;
      try {
        next = apply_move(state, m);
      } catch (const error&) {
        continue;
      }
      const std::string key = factorization_key(next);
      if (seen[side].count(key)) continue;
      const int id = static_cast<int>(nodes[side].size());
      nodes[side].push_back({next, cur, m, nodes[side][cur].depth + 1});
      seen[side][key] = id;
      queue[side].push_back(id);

      auto other = seen[1 - side].find(key);
      if (other != seen[1 - side].end()) {
        if (side == 0)
          assemble(id, other->second);
        else
          assemble(other->second, id);
        outcome.states_explored = explored;
        return outcome;
      }
    }
  }
  outcome.states_explored = explored;
  return outcome;  // frontier exhausted without meeting: Unknown
}

}  // namespace mono
