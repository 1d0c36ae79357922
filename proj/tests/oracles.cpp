#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "mono/free_word.hpp"

namespace oracle {

using mono::BraidFactorization;
using mono::BraidWord;
using mono::Factor;
using mono::IMatrix;
using mono::MonodromyRep;
using mono::Permutation;

// ---------------------------------------------------------------------------
// Dehornoy handle reduction.
//
// A handle is a subword s_i^e u s_i^{-e} whose interior u contains only
// letters of index > i. Reducing the leftmost-closing handle is always
// permitted (its interior contains no nested handle), and iterating
// terminates with the empty word exactly for trivial braids.

std::vector<int> handle_reduce(std::vector<int> w, int /*strand_count*/) {
  const std::size_t kMaxLen = 200000;
  const long kMaxSteps = 2000000;
  long steps = 0;
  for (;;) {
    if (++steps > kMaxSteps) throw std::runtime_error("handle reduction exceeded step budget");
    int open = -1, close = -1;
    for (std::size_t q = 0; q < w.size() && close < 0; ++q) {
      const int iq = w[q] < 0 ? -w[q] : w[q];
      for (std::size_t p = q; p-- > 0;) {
        const int ip = w[p] < 0 ? -w[p] : w[p];
        if (ip > iq) continue;
        if (ip == iq && w[p] == -w[q]) {
          open = static_cast<int>(p);
          close = static_cast<int>(q);
        }
        break;  // nearest letter of index <= iq decides
      }
    }
    if (close < 0) return w;

    const int i = w[open] < 0 ? -w[open] : w[open];
    const int e = w[open] > 0 ? 1 : -1;
    std::vector<int> next(w.begin(), w.begin() + open);
    for (int t = open + 1; t < close; ++t) {
      const int a = w[t] < 0 ? -w[t] : w[t];
      if (a == i + 1) {
        next.push_back(-e * (i + 1));
        next.push_back(w[t] > 0 ? i : -i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(w[t]);
      }
    }
    next.insert(next.end(), w.begin() + close + 1, w.end());
    if (next.size() > kMaxLen) throw std::runtime_error("handle reduction exceeded length budget");
    w = std::move(next);
  }
}

bool dehornoy_trivial(const BraidWord& w) {
  return handle_reduce(w.letters, w.strand_count).empty();
}

bool dehornoy_equal(const BraidWord& a, const BraidWord& b) {
  return dehornoy_trivial(mono::compose(a, mono::invert(b)));
}

// ---------------------------------------------------------------------------
// Reduced Burau at t = -1 in the chain-cycle basis c_1..c_{d-1} with
// <c_i, c_{i+1}> = 1: the generator s_i acts as the transvection along c_i,
//   c_{i-1} -> c_{i-1} - c_i,   c_{i+1} -> c_{i+1} + c_i,   c_i -> c_i.

namespace {

IMatrix burau_gen(int d, int i, bool inverse) {
  IMatrix m = IMatrix::identity(d - 1);
  const int s = inverse ? -1 : 1;
  if (i - 2 >= 0) m.at(i - 2, i - 1) = -s;  // row convention: row = image of basis vector
  if (i < d - 1) m.at(i, i - 1) = s;
  return m;
}

}  // namespace

IMatrix burau_minus_one(const BraidWord& w) {
  IMatrix m = IMatrix::identity(w.strand_count - 1);
  for (int l : w.letters) m = m * burau_gen(w.strand_count, l < 0 ? -l : l, l < 0);
  return m;
}

// ---------------------------------------------------------------------------
// Random data.

BraidWord random_word(std::mt19937& rng, int d, int len) {
  std::uniform_int_distribution<int> gen(1, d - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> ls;
  ls.reserve(len);
  for (int k = 0; k < len; ++k) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(d, std::move(ls));
}

BraidFactorization smooth_curve_factorization(int d) {
  // Delta^2 = (s_1 ... s_{d-1})^d with each letter s_t written as a
  // conjugated s_1: the conjugator S_2^{-1} S_3^{-1} ... S_t^{-1} with
  // S_k = s_1 s_2 ... s_k shifts s_1 up to s_t.
  std::vector<BraidWord> conj(d);
  conj[1] = BraidWord::identity(d);
  for (int t = 2; t < d; ++t) {
    std::vector<int> sk;
    for (int i = 1; i <= t; ++i) sk.push_back(i);
    conj[t] = mono::compose(conj[t - 1], mono::invert(BraidWord(d, sk)));
  }
  std::vector<Factor> fs;
  for (int rep = 0; rep < d; ++rep)
    for (int t = 1; t < d; ++t) fs.emplace_back(conj[t], 1);
  return BraidFactorization(d, std::move(fs));
}

BraidFactorization random_valid_factorization(std::mt19937& rng, int d, int max_factors,
                                              bool with_nodes) {
  BraidFactorization f = smooth_curve_factorization(d);
  std::uniform_int_distribution<int> moves(0, with_nodes ? 3 : 1);
  std::uniform_int_distribution<int> genpick(1, d - 1);
  const int steps = std::uniform_int_distribution<int>(3, 10)(rng);
  for (int s = 0; s < steps; ++s) {
    const int k = static_cast<int>(f.factors.size());
    switch (moves(rng)) {
      case 0: {
        if (k < 2) break;
        int at = std::uniform_int_distribution<int>(1, k - 1)(rng);
        f = hurwitz_move(f, at,
                         std::uniform_int_distribution<int>(0, 1)(rng)
                             ? mono::HurwitzDirection::Forward
                             : mono::HurwitzDirection::Backward);
        break;
      }
      case 1: {
        int g = genpick(rng);
        f = global_conjugate(f, BraidWord::generator(d, g, std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1));
        break;
      }
      default: {
        if (k + 2 > max_factors) break;
        int at = std::uniform_int_distribution<int>(1, k + 1)(rng);
        BraidWord q = random_word(rng, d, std::uniform_int_distribution<int>(0, 4)(rng));
        f.factors.insert(f.factors.begin() + (at - 1), {Factor(q, -2), Factor(q, 2)});
        break;
      }
    }
  }
  return f;
}

MonodromyRep random_rep(std::mt19937& rng, int n, int d) {
  // A template list with identity product and transitive support, then a
  // Hurwitz scramble (conjugation moves preserve both properties).
  if (d < 2 * (n - 1) || d % 2 != 0) throw std::runtime_error("no simple cover with these n, d");
  std::uniform_int_distribution<int> pick(0, n - 2);
  std::vector<Permutation> base;
  for (int v = 1; v < n; ++v) {
    base.push_back(Permutation::transposition(n, v - 1, v));
    base.push_back(Permutation::transposition(n, v - 1, v));
  }
  while (static_cast<int>(base.size()) < d) {
    int v = pick(rng);
    base.push_back(Permutation::transposition(n, v, v + 1));
    base.push_back(Permutation::transposition(n, v, v + 1));
  }
  const int scrambles = std::uniform_int_distribution<int>(d, 4 * d)(rng);
  std::uniform_int_distribution<int> pos(0, d - 2);
  for (int s = 0; s < scrambles; ++s) {
    int i = pos(rng);
    // (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1} t_i t_{i+1}): product preserved.
    Permutation a = base[i], b = base[i + 1];
    base[i] = b;
    base[i + 1] = b.then(a).then(b);
  }
  std::vector<std::pair<int, int>> imgs;
  for (const auto& t : base) {
    int x = -1, y = -1;
    for (int v = 0; v < n; ++v)
      if (t.apply(v) != v) (x < 0 ? x : y) = v;
    imgs.emplace_back(x + 1, y + 1);
  }
  return MonodromyRep(d, n, std::move(imgs));
}

}  // namespace oracle
