#include "mono/monodromy_rep.hpp"

#include <algorithm>

namespace mono {

MonodromyRep::MonodromyRep(int d_, int n_, std::vector<std::pair<int, int>> imgs)
    : d(d_), n(n_), images(std::move(imgs)) {
  if (d < 1 || n < 2) throw precondition_error("monodromy representation needs d >= 1, n >= 2");
  if (static_cast<int>(images.size()) != d)
    throw precondition_error("expected " + std::to_string(d) + " images, got " +
                             std::to_string(images.size()));
  for (auto& [a, b] : images) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b)
      throw precondition_error("image {" + std::to_string(a) + "," + std::to_string(b) +
                               "} is not a transposition of {1.." + std::to_string(n) + "}");
  }
}

Permutation MonodromyRep::image(int i) const {
  const auto& [a, b] = images[i - 1];
  return Permutation::transposition(n, a - 1, b - 1);
}

Permutation evaluate(const MonodromyRep& theta, const FreeWord& w) {
  if (w.rank != theta.d) throw mismatch_error("free-word rank does not match representation");
  Permutation p = Permutation::identity(theta.n);
  for (int l : w.letters) {
    // transpositions are involutions, so the sign of the letter is immaterial
    p = p.then(theta.image(l < 0 ? -l : l));
  }
  return p;
}

ValidationReport validate_rep(const MonodromyRep& theta) {
  ValidationReport rep;
  rep.add("transpositions", true, "all images stored as transpositions");

  Permutation prod = evaluate(theta, FreeWord::boundary(theta.d));
  rep.add("product_identity", prod.is_identity(),
          prod.is_identity() ? "" : "product of images is " + prod.cycle_string());

  // Transitivity of the generated subgroup == connectivity of the support
  // graph; for transpositions this already forces the full symmetric group.
  std::vector<int> comp(theta.n);
  for (int i = 0; i < theta.n; ++i) comp[i] = i;
  auto root = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [a, b] : theta.images) comp[root(a - 1)] = root(b - 1);
  int classes = 0;
  for (int i = 0; i < theta.n; ++i) classes += root(i) == i;
  rep.add("transitive", classes == 1,
          classes == 1 ? "" : std::to_string(classes) + " orbits on " + std::to_string(theta.n) +
                                  " sheets");
  return rep;
}

bool is_transposition(const Permutation& p) {
  int moved = 0;
  for (int i = 0; i < p.degree(); ++i)
    if (p.apply(i) != i) ++moved;
  if (moved != 2) return false;
  return p.then(p).is_identity();
}

namespace {

std::pair<int, int> support(const Permutation& t) {
  int a = -1, b = -1;
  for (int i = 0; i < t.degree(); ++i)
    if (t.apply(i) != i) (a < 0 ? a : b) = i;
  return {a, b};
}

}  // namespace

bool transpositions_disjoint(const Permutation& a, const Permutation& b) {
  if (!is_transposition(a) || !is_transposition(b)) return false;
  auto [a1, a2] = support(a);
  auto [b1, b2] = support(b);
  return a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
}

bool transpositions_linked(const Permutation& a, const Permutation& b) {
  if (!is_transposition(a) || !is_transposition(b)) return false;
  auto [a1, a2] = support(a);
  auto [b1, b2] = support(b);
  int shared = (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
  return shared == 1;
}

ValidationReport check_compatibility(const MonodromyRep& theta, const BraidFactorization& f) {
  ValidationReport rep;
  if (theta.d != f.strand_count) {
    rep.add("index_match", false,
            "theta.d = " + std::to_string(theta.d) + " but factorization has d = " +
                std::to_string(f.strand_count));
    return rep;
  }
  rep.add("index_match", true);

  const FreeWord g1 = FreeWord::generator(f.strand_count, 1);
  const FreeWord g2 = FreeWord::generator(f.strand_count, 2);
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    const Factor& fac = f.factors[j];
    const Permutation a = evaluate(theta, artin_act(g1, fac.conjugator));
    const Permutation b = evaluate(theta, artin_act(g2, fac.conjugator));
    const std::string name = "factor_" + std::to_string(j + 1);
    const std::string pair_str = a.cycle_string() + " and " + b.cycle_string();
    if (fac.degree == 1) {
      rep.add(name, a == b, a == b ? "" : "tangency requires equal images, got " + pair_str);
    } else if (fac.degree == 2 || fac.degree == -2) {
      const bool ok = transpositions_disjoint(a, b);
      rep.add(name, ok, ok ? "" : "node requires distinct commuting transpositions, got " + pair_str);
    } else {
      const bool ok = transpositions_linked(a, b);
      rep.add(name, ok, ok ? "" : "cusp requires non-commuting transpositions, got " + pair_str);
    }
  }
  return rep;
}

bool is_liftable(const MonodromyRep& theta, const BraidWord& q) {
  if (theta.d != q.strand_count) throw mismatch_error("strand count does not match representation");
  for (int i = 1; i <= theta.d; ++i) {
    FreeWord g = FreeWord::generator(theta.d, i);
    if (evaluate(theta, artin_act(g, q)) != theta.image(i)) return false;
  }
  return true;
}

bool liftability_of_factorization(const MonodromyRep& theta, const BraidFactorization& f) {
  if (theta.d != f.strand_count) throw mismatch_error("strand count does not match representation");
  for (const auto& fac : f.factors)
    if (!is_liftable(theta, underlying_braid(fac))) return false;
  return true;
}

MonodromyRep conjugate_rep(const MonodromyRep& theta, const BraidWord& q) {
  if (theta.d != q.strand_count) throw mismatch_error("strand count does not match representation");
  std::vector<std::pair<int, int>> imgs;
  imgs.reserve(theta.d);
  for (int i = 1; i <= theta.d; ++i) {
    Permutation p = evaluate(theta, artin_act(FreeWord::generator(theta.d, i), q));
    if (!is_transposition(p))
      throw error("internal: conjugated image is not a transposition");
    int a = -1, b = -1;
    for (int x = 0; x < p.degree(); ++x)
      if (p.apply(x) != x) (a < 0 ? a : b) = x;
    imgs.emplace_back(a + 1, b + 1);
  }
  return MonodromyRep(theta.d, theta.n, std::move(imgs));
}

}  // namespace mono
