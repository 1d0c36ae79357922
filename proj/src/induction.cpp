#include "mono/induction.hpp"

namespace mono {

namespace {

ValidationReport level1_report(const LinearSystemData& data) {
  ValidationReport rep;
  ValidationReport tv = validate_rep(data.theta1);
  std::string tdetail;
  for (const auto& c : tv.checks)
    if (!c.pass) tdetail += (tdetail.empty() ? "" : "; ") + c.name + ": " + c.detail;
  rep.add("level1_theta1_valid", tv.pass(), tdetail);

  if (data.rhos.empty()) {
    rep.add("level1_rho2_present", false, "no factorizations in the chain");
    return rep;
  }
  const BraidFactorization& rho2 = data.rhos[0];
  rep.add("level1_rho2_index", data.theta1.d == rho2.strand_count,
          "theta1.d = " + std::to_string(data.theta1.d) + ", rho2 braid index = " +
              std::to_string(rho2.strand_count));

  ValidationReport fv = validate(rho2);
  std::string fdetail;
  for (const auto& c : fv.checks)
    if (!c.pass) fdetail += (fdetail.empty() ? "" : "; ") + c.name;
  rep.add("level1_rho2_valid", fv.pass(), fdetail);

  if (data.theta1.d != rho2.strand_count) return rep;

  ValidationReport cv = check_compatibility(data.theta1, rho2);
  std::string cdetail;
  for (const auto& c : cv.checks)
    if (!c.pass) cdetail += (cdetail.empty() ? "" : "; ") + c.name + " (" + c.detail + ")";
  rep.add("level1_compatibility", cv.pass(), cdetail);

  std::string ldetail;
  bool lift_ok = true;
  for (std::size_t j = 0; j < rho2.factors.size(); ++j) {
    if (!is_liftable(data.theta1, underlying_braid(rho2.factors[j]))) {
      lift_ok = false;
      ldetail += (ldetail.empty() ? "factor " : ", ") + std::to_string(j + 1);
    }
  }
  rep.add("level1_liftability", lift_ok, ldetail);
  return rep;
}

}  // namespace

Theta2Shadow derive_theta2_shadow(const LinearSystemData& data) {
  ValidationReport l1 = level1_report(data);
  if (!l1.pass()) {
    std::string why;
    for (const auto& c : l1.checks)
      if (!c.pass) why += (why.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : ": " + c.detail);
    throw chain_precondition_error("level-1 preconditions failed: " + why, std::move(l1));
  }
  Theta2Shadow shadow;
  shadow.cover = std::make_shared<CoverModel>(build_cover(data.theta1));
  const BraidFactorization& rho2 = data.rhos[0];
  for (std::size_t j = 0; j < rho2.factors.size(); ++j) {
    if (rho2.factors[j].degree != 1) continue;
    shadow.tangency_images.push_back(lift_action(*shadow.cover, underlying_braid(rho2.factors[j])));
    shadow.tangency_positions.push_back(j);
  }
  return shadow;
}

bool has_unverified_levels(const LinearSystemData& data) { return data.rhos.size() >= 3; }

namespace {

// Generator images of the theta_2 shadow together with their inverses
// (computed once; a transvection inverts as 2I - M, anything else goes
// through Smith normal form).
struct ShadowImages {
  std::vector<IMatrix> fwd, inv;

  explicit ShadowImages(const std::vector<SymplecticAction>& images) {
    for (const auto& a : images) {
      fwd.push_back(a.m);
      const int r = a.m.rows();
      IMatrix guess = IMatrix::identity(r) + (IMatrix::identity(r) - a.m);
      if (a.m * guess == IMatrix::identity(r)) {
        inv.push_back(std::move(guess));
      } else {
        SmithResult s = smith_normal_form(a.m);
        if (s.d != IMatrix::identity(r)) throw error("shadow image is not invertible over Z");
        inv.push_back(s.v * s.u);
      }
    }
  }

  IMatrix eval(const FreeWord& w) const {
    const int r = fwd.empty() ? 0 : fwd[0].rows();
    IMatrix m = IMatrix::identity(r);
    for (int l : w.letters) m = m * (l > 0 ? fwd[l - 1] : inv[-l - 1]);
    return m;
  }
};

// Extract the transvection direction of a shadow matrix (zero vector for the
// identity); mirrors vanishing_class but works on a bare matrix.
IVec transvection_direction(const IMatrix& m, const IMatrix& j) {
  const int r = m.rows();
  const IMatrix b = m - IMatrix::identity(r);
  if (b.is_zero()) return IVec(r);
  int i0 = -1;
  for (int i = 0; i < r && i0 < 0; ++i)
    for (int k = 0; k < r; ++k)
      if (b.at(i, k) != 0) {
        i0 = i;
        break;
      }
  IVec p(r);
  Int gc = 0;
  for (int k = 0; k < r; ++k) {
    p[k] = b.at(i0, k);
    gc = boost::multiprecision::gcd(gc, p[k]);
  }
  for (auto& x : p) x /= gc;
  IVec u(r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) u[i] += j.at(i, k) * p[k];
  Int c2;
  bool have = false;
  for (int i = 0; i < r && !have; ++i)
    for (int k = 0; k < r; ++k)
      if (u[i] != 0 && p[k] != 0) {
        Int denom = u[i] * p[k];
        if (b.at(i, k) % denom != 0) throw error("shadow image is not a transvection");
        c2 = b.at(i, k) / denom;
        have = true;
        break;
      }
  if (!have || c2 <= 0) throw error("shadow image is not a transvection");
  Int cc = boost::multiprecision::sqrt(c2);
  if (cc * cc != c2) throw error("shadow image is not a transvection");
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      if (b.at(i, k) != c2 * u[i] * p[k]) throw error("shadow image is not a transvection");
  IVec v(r);
  for (int k = 0; k < r; ++k) v[k] = cc * p[k];
  return v;
}

Int pair_with(const IMatrix& j, const IVec& x, const IVec& y) {
  Int s = 0;
  for (int i = 0; i < j.rows(); ++i)
    for (int k = 0; k < j.cols(); ++k) s += x[i] * j.at(i, k) * y[k];
  return s;
}

}  // namespace

ValidationReport validate_chain(const LinearSystemData& data, bool check_chain_indices) {
  ValidationReport rep;
  rep.add("structure", data.half_dim >= 2 &&
                           data.rhos.size() == static_cast<std::size_t>(data.half_dim - 1),
          "half_dim = " + std::to_string(data.half_dim) + ", factorization count = " +
              std::to_string(data.rhos.size()) + " (expected half_dim - 1)");

  // LEVEL 1 (fully verified).
  ValidationReport l1 = level1_report(data);
  for (auto& c : l1.checks) rep.checks.push_back(c);

  // LEVEL 2 (homological shadow).
  bool have_shadow = false;
  Theta2Shadow shadow;
  if (l1.pass()) {
    try {
      shadow = derive_theta2_shadow(data);
      have_shadow = true;
      ValidationReport pencil = pencil_monodromy_check(*shadow.cover, data.rhos[0]);
      std::string pdetail;
      for (const auto& c : pencil.checks)
        if (!c.pass) pdetail += (pdetail.empty() ? "" : "; ") + c.name;
      rep.add("level2_shadow", pencil.pass(), pdetail);
    } catch (const error& e) {
      rep.add("level2_shadow", false, e.what());
    }
  } else {
    rep.add("level2_shadow", false, "level-1 checks failed");
  }

  if (data.rhos.size() >= 2) {
    const BraidFactorization& rho3 = data.rhos[1];
    const int d3 = rho3.strand_count;
    const int tangencies = data.rhos[0].tangency_count();
    if (check_chain_indices)
      rep.add("level2_chain_index", d3 == tangencies,
              "rho3 braid index " + std::to_string(d3) + ", rho2 tangency count " +
                  std::to_string(tangencies));

    ValidationReport fv = validate(rho3);
    std::string fdetail;
    for (const auto& c : fv.checks)
      if (!c.pass) fdetail += (fdetail.empty() ? "" : "; ") + c.name;
    rep.add("level2_rho3_valid", fv.pass(), fdetail);

    if (have_shadow && d3 == static_cast<int>(shadow.tangency_images.size())) {
      const IMatrix& jm = shadow.cover->intersection_form();
      const ShadowImages images(shadow.tangency_images);
      bool clauses_ok = true, lift_ok = true;
      std::string cdetail, ldetail;
      const FreeWord g1 = FreeWord::generator(d3, 1);
      const FreeWord g2 = FreeWord::generator(d3, 2);
      for (std::size_t k = 0; k < rho3.factors.size(); ++k) {
        const Factor& fac = rho3.factors[k];
        try {
          IMatrix a = images.eval(artin_act(g1, fac.conjugator));
          IMatrix b = images.eval(artin_act(g2, fac.conjugator));
          bool ok = true;
          if (fac.degree == 1) {
            ok = a == b;
          } else {
            IVec va = transvection_direction(a, jm);
            IVec vb = transvection_direction(b, jm);
            Int ip = pair_with(jm, va, vb);
            if (fac.degree == 2 || fac.degree == -2)
              ok = ip == 0;
            else
              ok = ip == 1 || ip == -1;
          }
          if (!ok) {
            clauses_ok = false;
            cdetail += (cdetail.empty() ? "factor " : ", ") + std::to_string(k + 1);
          }
        } catch (const error& e) {
          clauses_ok = false;
          cdetail += (cdetail.empty() ? "factor " : ", ") + std::to_string(k + 1) + " (" +
                     e.what() + ")";
        }
        // liftability shadow: the theta_2 images are stabilized by the factor
        try {
          const BraidWord u = underlying_braid(fac);
          for (int t = 1; t <= d3; ++t) {
            FreeWord g = FreeWord::generator(d3, t);
            if (images.eval(artin_act(g, u)) != shadow.tangency_images[t - 1].m) {
              lift_ok = false;
              ldetail += (ldetail.empty() ? "factor " : ", ") + std::to_string(k + 1);
              break;
            }
          }
        } catch (const error& e) {
          lift_ok = false;
          ldetail += (ldetail.empty() ? "factor " : ", ") + std::to_string(k + 1) + " (" +
                     e.what() + ")";
        }
      }
      rep.add("level2_rho3_clauses", clauses_ok, cdetail);
      rep.add("level2_rho3_liftability", lift_ok, ldetail);
    } else if (have_shadow) {
      rep.add("level2_rho3_clauses", false,
              "braid index does not match the tangency-image count");
    }
  }

  // LEVELS >= 3 (structural only).
  for (std::size_t level = 2; level < data.rhos.size(); ++level) {
    const BraidFactorization& rho = data.rhos[level];
    const std::string tag = "level" + std::to_string(level + 1) + "_rho" + std::to_string(level + 2);
    ValidationReport fv = validate(rho);
    std::string fdetail;
    for (const auto& c : fv.checks)
      if (!c.pass) fdetail += (fdetail.empty() ? "" : "; ") + c.name;
    rep.add(tag + "_valid_structural", fv.pass(), fdetail);
    if (check_chain_indices)
      rep.add(tag + "_chain_index_structural",
              rho.strand_count == data.rhos[level - 1].tangency_count(),
              "braid index " + std::to_string(rho.strand_count) + ", previous tangency count " +
                  std::to_string(data.rhos[level - 1].tangency_count()));
  }

  rep.add("verification_boundary", true,
          has_unverified_levels(data)
              ? "levels 1-2 verified (level 2 homologically); levels >= 3 structurally checked, not verified"
              : "levels 1-2 verified (level 2 homologically); no higher levels present");
  return rep;
}

}  // namespace mono
