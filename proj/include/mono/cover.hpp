#pragma once

#include <optional>
#include <vector>

#include "mono/factorization.hpp"
#include "mono/free_word.hpp"
#include "mono/matrix.hpp"
#include "mono/monodromy_rep.hpp"
#include "mono/report.hpp"

namespace mono {

// Integer matrix preserving the intersection form; acts on row vectors so
// that action(QR) = action(Q) * action(R).
struct SymplecticAction {
  IMatrix m;

  bool operator==(const SymplecticAction&) const = default;
  bool is_identity() const { return m == IMatrix::identity(m.rows()); }
};

// Combinatorial n-fold simple branched cover of the disk determined by a
// monodromy representation: spine graph, genus/boundary bookkeeping, and the
// lattice H_1 of the boundary-capped surface with its intersection form.
class CoverModel {
 public:
  explicit CoverModel(MonodromyRep theta);

  const MonodromyRep& theta() const { return theta_; }
  int genus() const { return genus_; }
  int boundary_count() const { return boundary_count_; }
  int h1_rank() const { return 2 * genus_; }

  // Spine size bookkeeping (lift of the base star with all unramified
  // preimages included).
  int spine_vertices() const { return theta_.n + (theta_.n - 1) * theta_.d; }
  int spine_edges() const { return theta_.n * theta_.d; }

  // Intersection form in the final (symplectically normalized) basis:
  // block-diagonal [[0,1],[-1,0]] pairs.
  const IMatrix& intersection_form() const { return j_; }

  // Pairing of two classes given in the final basis.
  Int pair(const IVec& x, const IVec& y) const;

  // Class in H_1 of the capped surface of the lift (based on sheet 1) of a
  // loop w with theta(w) fixing sheet 1.
  IVec homology_class(const FreeWord& w) const;

  // Representative loops of the final basis classes.
  const std::vector<FreeWord>& basis_loops() const { return basis_loops_; }

 private:
  MonodromyRep theta_;
  int genus_ = 0;
  int boundary_count_ = 0;

  std::vector<std::pair<int, int>> supports_;  // 0-based {a,b} per branch point

  // Pruned spine: fiber vertices 0..n-1, ramification vertices n..n+d-1,
  // half-arc e(j,side) joining the fiber vertex supports_[j][side] to the
  // ramification vertex over q_j. Edge ids: 2*j + side.
  std::vector<bool> edge_in_tree_;
  std::vector<std::vector<std::pair<int, int>>> tree_path_;  // vertex -> (edge,dir)*
  std::vector<int> nontree_edges_;

  IMatrix lambda_to_final_;  // (2g x m) composite coordinate map, m = d-n+1
  IMatrix j_;                // final intersection form

  std::vector<FreeWord> basis_loops_;

  IVec chain_lambda(const FreeWord& w) const;  // cycle coords on non-tree edges
  friend CoverModel build_cover(const MonodromyRep&);
};

CoverModel build_cover(const MonodromyRep& theta);

// Induced action on H_1 of the capped surface; requires is_liftable(theta, q).
SymplecticAction lift_action(const CoverModel& c, const BraidWord& q);

// Homology class of the lifted twist loop of a degree-1 factor; nullopt when
// the class dies in the capped surface (the lift is the identity matrix).
// Satisfies lift = (x -> x + <x,v> v) exactly; throws if the lift is not a
// transvection.
std::optional<IVec> vanishing_class(const CoverModel& c, const Factor& f);

// Homological shadow of the pencil-monodromy statement: node/cusp factors
// lift to the identity, the ordered product of all lifts equals the lift of
// the full twist, and tangency factors lift to transvections.
ValidationReport pencil_monodromy_check(const CoverModel& c, const BraidFactorization& f);

}  // namespace mono
