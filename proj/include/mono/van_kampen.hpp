#pragma once

#include <vector>

#include "mono/factorization.hpp"
#include "mono/free_word.hpp"
#include "mono/matrix.hpp"

namespace mono {

struct GroupPresentation {
  int generator_count = 0;
  std::vector<FreeWord> relations;  // each relator stored freely reduced

  bool operator==(const GroupPresentation&) const = default;
};

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // each >= 2, d_i | d_{i+1}

  bool operator==(const AbelianInvariants&) const = default;
  std::string to_string() const;  // "0", "Z", "Z/3", "Z^2 + Z/2 + Z/4", ...
};

enum class PresentationMode { Affine, Projective };

// One relation per factor (tangency g1*Q = g2*Q, node [g1*Q, g2*Q] = 1,
// cusp (g1 g2 g1)*Q = (g2 g1 g2)*Q), written as relators u v^{-1}; projective
// mode appends g1...gd = 1. Requires a valid factorization.
GroupPresentation presentation_from_factorization(const BraidFactorization& f,
                                                  PresentationMode mode);

struct TietzeBudget {
  int max_passes = 100;
  // Generator elimination is skipped if it would push the total relation
  // length beyond growth_cap x the input length.
  double growth_cap = 4.0;
};

GroupPresentation tietze_simplify(const GroupPresentation& p, TietzeBudget budget = {});

AbelianInvariants abelianization(const GroupPresentation& p);

}  // namespace mono
