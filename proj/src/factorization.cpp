#include "mono/factorization.hpp"

#include "mono/monodromy_rep.hpp"

namespace mono {

namespace {

bool degree_in_type_range(int r) {
  return r == 1 || r == 2 || r == -2 || r == 3 || r == -3;
}

const char* census_key(int r) {
  switch (r) {
    case 1: return "tangency";
    case 2: return "node_pos";
    case -2: return "node_neg";
    case 3: return "cusp";
    default: return "cusp_neg";
  }
}

}  // namespace

Factor::Factor(BraidWord q, int r) : conjugator(std::move(q)), degree(r) {
  if (!degree_in_type_range(r))
    throw precondition_error("factor degree must be one of {1, 2, -2, 3, -3}, got " +
                             std::to_string(r));
}

BraidWord underlying_braid(const Factor& f) {
  const int d = f.conjugator.strand_count;
  std::vector<int> power(static_cast<std::size_t>(f.degree < 0 ? -f.degree : f.degree),
                         f.degree < 0 ? -1 : 1);
  return compose(compose(invert(f.conjugator), BraidWord(d, std::move(power))), f.conjugator);
}

BraidFactorization::BraidFactorization(int d, std::vector<Factor> fs, bool allow_neg_cusps)
    : strand_count(d), allow_negative_cusps(allow_neg_cusps), factors(std::move(fs)) {
  if (d < 2) throw precondition_error("factorization strand count must be >= 2");
  for (const auto& f : factors)
    if (f.conjugator.strand_count != d)
      throw mismatch_error("factor conjugator strand count does not match factorization");
}

int BraidFactorization::tangency_count() const {
  int c = 0;
  for (const auto& f : factors) c += f.degree == 1;
  return c;
}

ValidationReport validate(const BraidFactorization& f) {
  ValidationReport rep;
  rep.has_census = true;
  rep.census = {{"tangency", 0}, {"node_pos", 0}, {"node_neg", 0}, {"cusp", 0}, {"cusp_neg", 0}};

  bool degrees_ok = true;
  std::string degree_detail;
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    const int r = f.factors[j].degree;
    rep.census[census_key(r)] += 1;
    if (r == -3 && !f.allow_negative_cusps) {
      degrees_ok = false;
      degree_detail += (degree_detail.empty() ? "" : "; ");
      degree_detail += "factor " + std::to_string(j + 1) + " has degree -3 without the flag";
    }
  }
  rep.add("degrees", degrees_ok, degrees_ok ? "" : degree_detail);

  long long sum = 0;
  for (const auto& fac : f.factors) sum += fac.degree;
  const long long want = static_cast<long long>(f.strand_count) * (f.strand_count - 1);
  rep.add("exponent_sum", sum == want,
          "sum of degrees " + std::to_string(sum) + ", d(d-1) = " + std::to_string(want));

  BraidWord prod = BraidWord::identity(f.strand_count);
  for (const auto& fac : f.factors) prod = compose(prod, underlying_braid(fac));
  const bool is_full_twist = group_equal(prod, full_twist(f.strand_count));
  rep.add("product_full_twist", is_full_twist,
          is_full_twist ? "product equals Delta^2" : "product differs from Delta^2");
  return rep;
}

BraidFactorization hurwitz_move(const BraidFactorization& f, int i, HurwitzDirection dir) {
  if (i < 1 || static_cast<std::size_t>(i) >= f.factors.size())
    throw precondition_error("hurwitz position " + std::to_string(i) + " out of range");
  BraidFactorization r = f;
  Factor& a = r.factors[i - 1];
  Factor& b = r.factors[i];
  if (dir == HurwitzDirection::Forward) {
    // (a, b) -> (b, b^{-1} a b): the moved factor picks up b's underlying braid.
    Factor moved(compose(a.conjugator, underlying_braid(b)), a.degree);
    a = b;
    b = std::move(moved);
  } else {
    // (a, b) -> (a b a^{-1}, a)
    Factor moved(compose(b.conjugator, invert(underlying_braid(a))), b.degree);
    b = a;
    a = std::move(moved);
  }
  return r;
}

BraidFactorization global_conjugate(const BraidFactorization& f, const BraidWord& q) {
  if (q.strand_count != f.strand_count)
    throw mismatch_error("global conjugator strand count mismatch");
  BraidFactorization r = f;
  for (auto& fac : r.factors) fac.conjugator = compose(fac.conjugator, q);
  return r;
}

BraidFactorization cancel_pair(const BraidFactorization& f, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= f.factors.size())
    throw precondition_error("cancel position " + std::to_string(i) + " out of range");
  const Factor& a = f.factors[i - 1];
  const Factor& b = f.factors[i];
  if (!((a.degree == 2 && b.degree == -2) || (a.degree == -2 && b.degree == 2)))
    throw precondition_error("degrees not +-2 at position " + std::to_string(i) + ": got " +
                             std::to_string(a.degree) + ", " + std::to_string(b.degree));
  if (!group_equal(underlying_braid(a), invert(underlying_braid(b))))
    throw precondition_error("not mutual inverses at position " + std::to_string(i));
  BraidFactorization r = f;
  r.factors.erase(r.factors.begin() + (i - 1), r.factors.begin() + (i + 1));
  return r;
}

BraidFactorization create_pair(const BraidFactorization& f, int i, const BraidWord& q,
                               const MonodromyRep& theta) {
  if (i < 1 || static_cast<std::size_t>(i) > f.factors.size() + 1)
    throw precondition_error("create position " + std::to_string(i) + " out of range");
  if (q.strand_count != f.strand_count) throw mismatch_error("pair conjugator strand count mismatch");
  ValidationReport compat = check_compatibility(theta, f);
  if (!compat.pass())
    throw precondition_error("monodromy representation is not compatible with the factorization");
  const Permutation a = evaluate(theta, artin_act(FreeWord::generator(f.strand_count, 1), q));
  const Permutation b = evaluate(theta, artin_act(FreeWord::generator(f.strand_count, 2), q));
  if (!transpositions_disjoint(a, b))
    throw precondition_error("inadmissible pair creation: " + a.cycle_string() + " and " +
                             b.cycle_string() + " are not disjoint transpositions");
  BraidFactorization r = f;
  r.factors.insert(r.factors.begin() + (i - 1), {Factor(q, -2), Factor(q, 2)});
  return r;
}

BraidFactorization normalize_factorization(const BraidFactorization& f) {
  BraidFactorization r = f;
  for (auto& fac : r.factors) fac.conjugator = canonical_form(fac.conjugator);
  return r;
}

std::string factorization_key(const BraidFactorization& f) {
  std::string s = std::to_string(f.strand_count);
  for (const auto& fac : f.factors) {
    s += '#';
    s += std::to_string(fac.degree);
    s += ':';
    s += normal_form(underlying_braid(fac)).key();
  }
  return s;
}

}  // namespace mono
