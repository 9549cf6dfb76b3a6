#pragma once

#include <gmpxx.h>

#include <vector>

#include "m0k/ground.hpp"

namespace m0k {

/// Per-label weights a_s in (0,1]; total must exceed 2.
struct HassettWeights {
  HassettWeights(GroundSet ground, std::vector<mpq_class> weights);

  GroundSet ground;
  std::vector<mpq_class> weights;
};

/// The collision rulebook: a simplicial complex on the marking set, stored
/// by its facets.  A set is a face iff it is contained in some facet, so
/// downward closure is automatic.  Singletons are required faces.
class SimplicialComplex {
 public:
  static SimplicialComplex discrete(GroundSet ground);
  static SimplicialComplex from_facets(GroundSet ground, std::vector<Mask> facets);

  /// Faces are the sets of weight-sum < 1, plus all singletons (a marking
  /// of weight 1 still occupies its own location).
  static SimplicialComplex from_hassett(const HassettWeights& weights);

  const GroundSet& ground() const { return ground_; }
  /// Facets, pairwise non-nested, sorted by mask_lex_less.
  const std::vector<Mask>& facets() const { return facets_; }

  /// Face membership; bits outside the ground set are a validation error.
  bool contains(Mask t) const;

  /// True iff every partition of S into faces has at least 3 parts.
  /// Equivalent to: S is not a face and no facet has a face complement.
  bool at_least_triparted() const;

  /// All faces, sorted by mask_lex_less.  Exponential in the ground size;
  /// meant for enumeration at desk scale.
  std::vector<Mask> faces() const;

  bool operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && facets_ == other.facets_;
  }

 private:
  SimplicialComplex(GroundSet ground, std::vector<Mask> facets);

  GroundSet ground_;
  std::vector<Mask> facets_;
};

}  // namespace m0k
