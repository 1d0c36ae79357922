#include "mono/free_word.hpp"

namespace mono {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

void check_letters(int rank, const std::vector<int>& ls) {
  for (int l : ls) {
    int i = l < 0 ? -l : l;
    if (i < 1 || i > rank)
      throw precondition_error("free-group letter " + std::to_string(l) + " out of range for F_" +
                               std::to_string(rank));
  }
}

}  // namespace

FreeWord::FreeWord(int r, std::vector<int> ls, bool reduce) : rank(r) {
  if (r < 0) throw precondition_error("free-group rank must be >= 0");
  check_letters(r, ls);
  if (reduce) {
    letters.reserve(ls.size());
    for (int l : ls) push_reduced(letters, l);
  } else {
    letters = std::move(ls);
  }
  if (letters.size() > word_length_limit())
    throw word_limit_error("free word exceeds length limit");
}

FreeWord FreeWord::generator(int r, int i, int sign) {
  return FreeWord(r, {sign >= 0 ? i : -i});
}

FreeWord FreeWord::boundary(int r) {
  std::vector<int> ls(r);
  for (int i = 0; i < r; ++i) ls[i] = i + 1;
  return FreeWord(r, std::move(ls));
}

FreeWord free_reduce(const FreeWord& w) { return FreeWord(w.rank, w.letters); }

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  if (a.rank != b.rank) throw mismatch_error("free-group rank mismatch");
  std::vector<int> ls = a.letters;
  ls.reserve(a.letters.size() + b.letters.size());
  for (int l : b.letters) push_reduced(ls, l);
  return FreeWord(a.rank, std::move(ls), false);
}

FreeWord invert(const FreeWord& w) {
  std::vector<int> ls;
  ls.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) ls.push_back(-*it);
  return FreeWord(w.rank, std::move(ls), false);
}

FreeWord artin_act(const FreeWord& w, const BraidWord& q) {
  if (w.rank != q.strand_count)
    throw mismatch_error("free-word rank " + std::to_string(w.rank) +
                         " does not match strand count " + std::to_string(q.strand_count));
  std::vector<int> cur = w.letters;
  for (int bl : q.letters) {
    const int i = bl < 0 ? -bl : bl;  // acts on g_i, g_{i+1}
    std::vector<int> next;
    next.reserve(cur.size() + 2);
    for (int l : cur) {
      const int a = l < 0 ? -l : l;
      if (a != i && a != i + 1) {
        push_reduced(next, l);
        continue;
      }
      if (bl > 0) {
        if (a == i) {
          if (l > 0) {  // g_i -> g_i g_{i+1} g_i^{-1}
            push_reduced(next, i);
            push_reduced(next, i + 1);
            push_reduced(next, -i);
          } else {
            push_reduced(next, i);
            push_reduced(next, -(i + 1));
            push_reduced(next, -i);
          }
        } else {  // g_{i+1} -> g_i
          push_reduced(next, l > 0 ? i : -i);
        }
      } else {
        if (a == i) {  // g_i -> g_{i+1}
          push_reduced(next, l > 0 ? i + 1 : -(i + 1));
        } else {  // g_{i+1} -> g_{i+1}^{-1} g_i g_{i+1}
          if (l > 0) {
            push_reduced(next, -(i + 1));
            push_reduced(next, i);
            push_reduced(next, i + 1);
          } else {
            push_reduced(next, -(i + 1));
            push_reduced(next, -i);
            push_reduced(next, i + 1);
          }
        }
      }
    }
    if (next.size() > word_length_limit()) throw word_limit_error("artin_act word growth exceeds limit");
    cur = std::move(next);
  }
  return FreeWord(w.rank, std::move(cur), false);
}

bool act_is_automorphism_check(const BraidWord& q) {
  const int d = q.strand_count;
  const BraidWord qinv = invert(q);
  // Invertibility on generators.
  for (int i = 1; i <= d; ++i) {
    FreeWord g = FreeWord::generator(d, i);
    if (artin_act(artin_act(g, q), qinv) != g) return false;
    if (artin_act(artin_act(g, qinv), q) != g) return false;
  }
  // Multiplicativity on a basis of pairs.
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      FreeWord a = FreeWord::generator(d, i);
      FreeWord b = FreeWord::generator(d, j, -1);
      FreeWord ab = concat(a, b);
      if (artin_act(ab, q) != concat(artin_act(a, q), artin_act(b, q))) return false;
    }
  return true;
}

}  // namespace mono
