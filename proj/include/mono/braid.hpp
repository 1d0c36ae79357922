#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mono/common.hpp"

namespace mono {

// Permutation on n symbols, 0-based internally; all library I/O is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);  // 0-based a != b

  int degree() const { return static_cast<int>(map_.size()); }
  int apply(int x) const { return map_[x]; }

  // Left-to-right product: (*this) first, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const;
  int cycle_count() const;             // including fixed points
  std::string cycle_string() const;    // "(1 2)(3 4)", "id" for identity

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  const std::vector<int>& images() const { return map_; }

 private:
  std::vector<int> map_;
};

// Element of the braid group B_d as a word in the Artin generators.
// Letter +i stands for s_i, letter -i for s_i^{-1}, 1 <= i < d.
struct BraidWord {
  int strand_count = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int d, std::vector<int> ls);

  static BraidWord identity(int d) { return BraidWord(d, {}); }
  static BraidWord generator(int d, int i, int sign = +1);

  std::size_t length() const { return letters.size(); }
  bool operator==(const BraidWord&) const = default;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);

// The full twist Delta^2 = (s_1 ... s_{d-1})^d; requires d >= 2.
BraidWord full_twist(int d);
// One positive half twist Delta (a fixed reduced word).
BraidWord half_twist_word(int d);

long long exponent_sum(const BraidWord& a);
Permutation permutation_image(const BraidWord& a);

// Garside left-canonical form: Delta^p A_1 ... A_k with left-weighted
// permutation-braid factors. Total normal form; unique per group element.
struct NormalForm {
  int strand_count = 1;
  long long delta_power = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm&) const = default;
  std::string key() const;  // compact encoding, usable as a hash/map key
};

NormalForm normal_form(const BraidWord& a);
// Unique word representative: the normal form re-serialized to letters.
BraidWord canonical_form(const BraidWord& a);
bool group_equal(const BraidWord& a, const BraidWord& b);

}  // namespace mono
