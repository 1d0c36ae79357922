#include "mono/braid.hpp"

#include <algorithm>
#include <atomic>

namespace mono {

namespace {

std::size_t g_word_limit = 1'000'000;

void check_length(std::size_t n) {
  if (n > g_word_limit)
    throw word_limit_error("word length " + std::to_string(n) + " exceeds limit " +
                           std::to_string(g_word_limit));
}

}  // namespace

std::size_t word_length_limit() { return g_word_limit; }
void set_word_length_limit(std::size_t limit) { g_word_limit = limit; }

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || v >= degree() || seen[v]) throw precondition_error("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.map_[a], p.map_[b]);
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  if (degree() != other.degree()) throw mismatch_error("permutation degree mismatch");
  Permutation r;
  r.map_.resize(map_.size());
  for (int i = 0; i < degree(); ++i) r.map_[i] = other.map_[map_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.map_.resize(map_.size());
  for (int i = 0; i < degree(); ++i) r.map_[map_[i]] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (map_[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(map_.size(), 0);
  int c = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = map_[j]) seen[j] = 1;
  }
  return c;
}

std::string Permutation::cycle_string() const {
  std::vector<char> seen(map_.size(), 0);
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || map_[i] == i) {
      seen[i] = 1;
      continue;
    }
    s += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = map_[j]) {
      seen[j] = 1;
      if (!first) s += ' ';
      s += std::to_string(j + 1);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

// ---------------------------------------------------------------------------
// BraidWord basics

BraidWord::BraidWord(int d, std::vector<int> ls) : strand_count(d), letters(std::move(ls)) {
  if (d < 1) throw precondition_error("strand count must be >= 1");
  for (int l : letters) {
    int i = l < 0 ? -l : l;
    if (i < 1 || i >= d)
      throw precondition_error("generator index " + std::to_string(i) + " out of range for B_" +
                               std::to_string(d));
  }
  check_length(letters.size());
}

BraidWord BraidWord::generator(int d, int i, int sign) {
  return BraidWord(d, {sign >= 0 ? i : -i});
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count != b.strand_count)
    throw mismatch_error("strand-count mismatch: " + std::to_string(a.strand_count) + " vs " +
                         std::to_string(b.strand_count));
  check_length(a.letters.size() + b.letters.size());
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord invert(const BraidWord& a) {
  BraidWord r;
  r.strand_count = a.strand_count;
  r.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord full_twist(int d) {
  if (d < 2) throw precondition_error("full_twist requires d >= 2");
  std::vector<int> ls;
  ls.reserve(static_cast<std::size_t>(d) * (d - 1));
  for (int rep = 0; rep < d; ++rep)
    for (int i = 1; i < d; ++i) ls.push_back(i);
  return BraidWord(d, std::move(ls));
}

long long exponent_sum(const BraidWord& a) {
  long long s = 0;
  for (int l : a.letters) s += l > 0 ? 1 : -1;
  return s;
}

Permutation permutation_image(const BraidWord& a) {
  Permutation p = Permutation::identity(a.strand_count);
  for (int l : a.letters) {
    int i = l < 0 ? -l : l;
    p = p.then(Permutation::transposition(a.strand_count, i - 1, i));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Garside left-canonical form.
//
// Permutation braids are encoded by their strand permutations; pi[x] is the
// end position of the strand starting at x. With the left-to-right product
// convention, pi_{AB} = pi_B o pi_A.

namespace {

using PermVec = std::vector<int>;

PermVec perm_identity(int d) {
  PermVec p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  return p;
}

bool perm_is_identity(const PermVec& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

PermVec perm_delta(int d) {
  PermVec p(d);
  for (int i = 0; i < d; ++i) p[i] = d - 1 - i;
  return p;
}

// apply a first, then b
PermVec perm_mul(const PermVec& a, const PermVec& b) {
  PermVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

PermVec perm_inv(const PermVec& a) {
  PermVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

// s_g <=_L A iff the strands starting at g-1, g cross, i.e. pi(g-1) > pi(g).
bool gen_left_divides(int g, const PermVec& p) { return p[g - 1] > p[g]; }

// A -> s_g^{-1} A (valid only when s_g <=_L A): swap entries g-1, g.
void gen_left_quotient(int g, PermVec& p) { std::swap(p[g - 1], p[g]); }

// Right complement dA = A^{-1} Delta, so A * dA = Delta.
PermVec right_complement(const PermVec& a, const PermVec& delta) {
  return perm_mul(perm_inv(a), delta);
}

// tau(A) = Delta^{-1} A Delta; flip automorphism on permutation braids.
PermVec tau(const PermVec& a, const PermVec& delta) {
  return perm_mul(delta, perm_mul(a, delta));
}

// Greatest common left divisor of two permutation braids (greedy ascent).
PermVec left_gcd(PermVec a, PermVec b) {
  const int d = static_cast<int>(a.size());
  PermVec m = perm_identity(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int g = 1; g < d; ++g) {
      if (gen_left_divides(g, a) && gen_left_divides(g, b)) {
        gen_left_quotient(g, a);
        gen_left_quotient(g, b);
        // m <- m * s_g
        PermVec t = perm_identity(d);
        std::swap(t[g - 1], t[g]);
        m = perm_mul(m, t);
        grew = true;
      }
    }
  }
  return m;
}

// Greedy smallest-generator serialization of a permutation braid.
void emit_letters(PermVec p, std::vector<int>& out, bool negative_reversed = false) {
  const int d = static_cast<int>(p.size());
  std::vector<int> ls;
  while (!perm_is_identity(p)) {
    int g = 0;
    for (int i = 1; i < d; ++i) {
      if (gen_left_divides(i, p)) {
        g = i;
        break;
      }
    }
    ls.push_back(g);
    gen_left_quotient(g, p);
  }
  if (!negative_reversed) {
    out.insert(out.end(), ls.begin(), ls.end());
  } else {
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(-*it);
  }
}

}  // namespace

BraidWord half_twist_word(int d) {
  std::vector<int> ls;
  emit_letters(perm_delta(d), ls);
  return BraidWord(d, std::move(ls));
}

NormalForm normal_form(const BraidWord& w) {
  const int d = w.strand_count;
  const PermVec delta = perm_delta(d);

  // Incremental: keep Delta^p F_1..F_k left-weighted and multiply one letter
  // at a time. The live factor list stays at the canonical length, so long
  // words normalize in roughly linear time.
  long long p = 0;
  std::vector<PermVec> fs;

  // Absorb a Delta factor at position j into the power, flipping the prefix.
  auto absorb_delta = [&](std::size_t j) {
    for (std::size_t t = 0; t < j; ++t) fs[t] = tau(fs[t], delta);
    fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(j));
    ++p;
  };

  for (int l : w.letters) {
    PermVec b;
    if (l > 0) {
      b = perm_identity(d);
      std::swap(b[l - 1], b[l]);
    } else {
      // s_g^{-1} = Delta^{-1} (Delta s_g^{-1}); the Delta^{-1} crosses the
      // whole current list, applying tau to every factor.
      --p;
      for (auto& f : fs) f = tau(f, delta);
      PermVec t = perm_identity(d);
      std::swap(t[-l - 1], t[-l]);
      b = perm_mul(delta, t);
    }
    if (perm_is_identity(b)) continue;
    if (b == delta) {
      for (auto& f : fs) f = tau(f, delta);
      ++p;
      continue;
    }
    fs.push_back(std::move(b));
    // Leftward sweep: each pair absorbs the maximal head of its right
    // neighbor; stop when a pair is already left-weighted.
    for (std::size_t j = fs.size() - 1; j-- > 0;) {
      if (j + 1 >= fs.size()) continue;
      PermVec x = left_gcd(right_complement(fs[j], delta), fs[j + 1]);
      if (perm_is_identity(x)) break;
      fs[j] = perm_mul(fs[j], x);
      fs[j + 1] = perm_mul(perm_inv(x), fs[j + 1]);
      if (perm_is_identity(fs[j + 1]))
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      if (fs[j] == delta) absorb_delta(j);
    }
  }

  // Backstop pass; the incremental sweeps leave at most local residue, and
  // this loop exits immediately once the list is stable.
  bool changed = true;
  std::size_t guard = 0;
  const std::size_t max_passes = fs.size() * 4 + 16;
  while (changed) {
    changed = false;
    if (++guard > max_passes)
      throw error("internal: canonical-form normalization failed to converge");
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      if (perm_is_identity(fs[i + 1])) continue;
      PermVec x = left_gcd(right_complement(fs[i], delta), fs[i + 1]);
      if (!perm_is_identity(x)) {
        fs[i] = perm_mul(fs[i], x);
        fs[i + 1] = perm_mul(perm_inv(x), fs[i + 1]);
        changed = true;
      }
    }
    fs.erase(std::remove_if(fs.begin(), fs.end(), perm_is_identity), fs.end());
    while (!fs.empty() && fs.front() == delta) {
      ++p;
      fs.erase(fs.begin());
    }
  }

  NormalForm nf;
  nf.strand_count = d;
  nf.delta_power = p;
  nf.factors.reserve(fs.size());
  for (auto& f : fs) nf.factors.emplace_back(Permutation(std::move(f)));
  return nf;
}

std::string NormalForm::key() const {
  std::string s = std::to_string(strand_count) + "^" + std::to_string(delta_power);
  for (const auto& f : factors) {
    s += '|';
    for (int v : f.images()) {
      s += static_cast<char>('0' + v / 10);
      s += static_cast<char>('0' + v % 10);
    }
  }
  return s;
}

BraidWord canonical_form(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  const int d = nf.strand_count;
  std::vector<int> ls;
  if (nf.delta_power > 0) {
    for (long long r = 0; r < nf.delta_power; ++r) emit_letters(perm_delta(d), ls);
  } else if (nf.delta_power < 0) {
    for (long long r = 0; r < -nf.delta_power; ++r) emit_letters(perm_delta(d), ls, true);
  }
  for (const auto& f : nf.factors) emit_letters(f.images(), ls);
  check_length(ls.size());
  return BraidWord(d, std::move(ls));
}

bool group_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count != b.strand_count)
    throw mismatch_error("strand-count mismatch in group_equal");
  return normal_form(a) == normal_form(b);
}

}  // namespace mono
