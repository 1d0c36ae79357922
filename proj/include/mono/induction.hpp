#pragma once

#include <memory>
#include <vector>

#include "mono/cover.hpp"
#include "mono/factorization.hpp"
#include "mono/monodromy_rep.hpp"
#include "mono/report.hpp"

namespace mono {

// Dimensional-induction data for a 2n-manifold: a symmetric-group
// representation theta_1 plus the chain of braid factorizations rho_2..rho_n,
// linked by "braid index of rho_{r+1} = tangency count of rho_r".
struct LinearSystemData {
  int half_dim = 2;  // the n with dim X = 2n, n >= 2
  MonodromyRep theta1;
  std::vector<BraidFactorization> rhos;  // rho_2, ..., rho_n
};

// The computable shadow of theta_2: the cover of theta_1 plus the ordered
// list of homological images of rho_2's tangency factors (node and cusp
// factors lift to the identity and carry no shadow information).
struct Theta2Shadow {
  std::shared_ptr<CoverModel> cover;
  std::vector<SymplecticAction> tangency_images;   // ordered, one per tangency
  std::vector<std::size_t> tangency_positions;     // 0-based factor indices
};

struct chain_precondition_error : error {
  ValidationReport report;
  chain_precondition_error(const std::string& msg, ValidationReport rep)
      : error(msg), report(std::move(rep)) {}
};

// Requires the level-1 checks to pass (valid theta1, compatibility with
// rho_2, liftability of every rho_2 factor); throws chain_precondition_error
// with the itemized report otherwise.
Theta2Shadow derive_theta2_shadow(const LinearSystemData& data);

// Level 1 fully checked, level 2 homologically, levels >= 3 structurally.
ValidationReport validate_chain(const LinearSystemData& data, bool check_chain_indices = true);

// True when the data contains levels that are only structurally checkable
// (rho_4 and beyond).
bool has_unverified_levels(const LinearSystemData& data);

}  // namespace mono
