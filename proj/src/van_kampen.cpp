#include "mono/van_kampen.hpp"

#include <algorithm>

namespace mono {

GroupPresentation presentation_from_factorization(const BraidFactorization& f,
                                                  PresentationMode mode) {
  ValidationReport v = validate(f);
  if (!v.pass())
    throw precondition_error("presentation requires a valid factorization of Delta^2");

  const int d = f.strand_count;
  GroupPresentation p;
  p.generator_count = d;
  const FreeWord g1 = FreeWord::generator(d, 1);
  const FreeWord g2 = FreeWord::generator(d, 2);
  const FreeWord g121 = FreeWord(d, {1, 2, 1});
  const FreeWord g212 = FreeWord(d, {2, 1, 2});

  for (const auto& fac : f.factors) {
    const BraidWord& q = fac.conjugator;
    if (fac.degree == 1) {
      p.relations.push_back(concat(artin_act(g1, q), invert(artin_act(g2, q))));
    } else if (fac.degree == 2 || fac.degree == -2) {
      FreeWord a = artin_act(g1, q);
      FreeWord b = artin_act(g2, q);
      p.relations.push_back(concat(concat(a, b), concat(invert(a), invert(b))));
    } else {
      p.relations.push_back(concat(artin_act(g121, q), invert(artin_act(g212, q))));
    }
  }
  if (mode == PresentationMode::Projective) p.relations.push_back(FreeWord::boundary(d));
  return p;
}

namespace {

std::size_t total_length(const GroupPresentation& p) {
  std::size_t n = 0;
  for (const auto& r : p.relations) n += r.letters.size();
  return n;
}

// Drop empty relators and duplicates (a relator equal to another or to its
// inverse presents nothing new).
void dedupe(GroupPresentation& p) {
  std::vector<FreeWord> kept;
  for (const auto& r : p.relations) {
    if (r.letters.empty()) continue;
    bool dup = false;
    for (const auto& k : kept)
      if (k == r || k == invert(r)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(r);
  }
  p.relations = std::move(kept);
}

// Substitute gen -> w in a relator, then renumber generators above gen down.
FreeWord substitute(const FreeWord& r, int gen, const FreeWord& w, int new_rank) {
  std::vector<int> out;
  for (int l : r.letters) {
    const int a = l < 0 ? -l : l;
    if (a == gen) {
      const auto& src = l > 0 ? w.letters : invert(w).letters;
      for (int x : src) out.push_back(x < 0 ? (-x > gen ? x + 1 : x) : (x > gen ? x - 1 : x));
    } else {
      int shifted = a > gen ? a - 1 : a;
      out.push_back(l < 0 ? -shifted : shifted);
    }
  }
  return FreeWord(new_rank, std::move(out));
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, TietzeBudget budget) {
  GroupPresentation cur = p;
  for (auto& r : cur.relations) r = free_reduce(r);
  dedupe(cur);
  const std::size_t cap =
      static_cast<std::size_t>(budget.growth_cap * static_cast<double>(std::max<std::size_t>(total_length(cur), 1)));

  for (int pass = 0; pass < budget.max_passes; ++pass) {
    bool changed = false;
    // Find a relator with a generator occurring exactly once (up to cyclic
    // rotation it then reads gen^s * w with w free of gen).
    for (std::size_t ri = 0; ri < cur.relations.size() && !changed; ++ri) {
      const FreeWord& r = cur.relations[ri];
      for (int gen = 1; gen <= cur.generator_count && !changed; ++gen) {
        int count = 0, pos = -1;
        for (std::size_t k = 0; k < r.letters.size(); ++k) {
          int a = r.letters[k] < 0 ? -r.letters[k] : r.letters[k];
          if (a == gen) {
            ++count;
            pos = static_cast<int>(k);
          }
        }
        if (count != 1) continue;
        // Rotate so the occurrence leads: r ~ gen^s w  =>  gen = w^{-s}.
        std::vector<int> rot(r.letters.begin() + pos, r.letters.end());
        rot.insert(rot.end(), r.letters.begin(), r.letters.begin() + pos);
        const int s = rot.front() > 0 ? 1 : -1;
        FreeWord w(cur.generator_count, std::vector<int>(rot.begin() + 1, rot.end()));
        FreeWord image = s > 0 ? invert(w) : w;  // gen expressed without gen

        GroupPresentation next;
        next.generator_count = cur.generator_count - 1;
        for (std::size_t k = 0; k < cur.relations.size(); ++k) {
          if (k == ri) continue;
          next.relations.push_back(
              substitute(cur.relations[k], gen, image, next.generator_count));
        }
        if (total_length(next) > cap) continue;  // heuristic growth guard
        dedupe(next);
        cur = std::move(next);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return cur;
}

std::string AbelianInvariants::to_string() const {
  std::string s;
  if (free_rank == 1)
    s = "Z";
  else if (free_rank > 1)
    s = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const int g = p.generator_count;
  IMatrix m(static_cast<int>(p.relations.size()), g);
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    for (int l : p.relations[i].letters) m.at(static_cast<int>(i), (l < 0 ? -l : l) - 1) += l < 0 ? -1 : 1;

  SmithResult snf = smith_normal_form(m);
  AbelianInvariants inv;
  inv.free_rank = g - snf.rank;
  for (int i = 0; i < snf.rank; ++i) {
    const Int& di = snf.d.at(i, i);
    if (di > 1) inv.torsion.push_back(di);
  }
  return inv;
}

}  // namespace mono
