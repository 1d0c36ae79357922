#pragma once

#include <vector>

#include "mono/braid.hpp"
#include "mono/common.hpp"

namespace mono {

// Element of the free group F_d on the geometric generators g_1..g_d,
// stored freely reduced. Letter +i is g_i, -i is g_i^{-1}.
struct FreeWord {
  int rank = 0;
  std::vector<int> letters;

  FreeWord() = default;
  FreeWord(int r, std::vector<int> ls, bool reduce = true);

  static FreeWord identity(int r) { return FreeWord(r, {}); }
  static FreeWord generator(int r, int i, int sign = +1);
  // g_1 g_2 ... g_d, the boundary loop.
  static FreeWord boundary(int r);

  bool operator==(const FreeWord&) const = default;
};

FreeWord free_reduce(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& w);

// Right Artin action of B_d on F_d, applied letter-by-letter left to right:
//   s_i:      g_i -> g_i g_{i+1} g_i^{-1},   g_{i+1} -> g_i
//   s_i^{-1}: g_i -> g_{i+1},                g_{i+1} -> g_{i+1}^{-1} g_i g_{i+1}
FreeWord artin_act(const FreeWord& w, const BraidWord& q);

// Verifies on a generator basis that the action of q is an automorphism
// (multiplicative, inverted by acting with invert(q)).
bool act_is_automorphism_check(const BraidWord& q);

}  // namespace mono
