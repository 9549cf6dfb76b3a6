#include "m0k/complex.hpp"

#include <algorithm>

#include "m0k/errors.hpp"
#include "m0k/rational.hpp"

namespace m0k {

HassettWeights::HassettWeights(GroundSet g, std::vector<mpq_class> w)
    : ground(std::move(g)), weights(std::move(w)) {
  if (weights.size() != static_cast<std::size_t>(ground.size())) {
    throw ValidationError("expected one weight per label");
  }
  mpq_class total = 0;
  for (int i = 0; i < ground.size(); ++i) {
    if (weights[i] <= 0 || weights[i] > 1) {
      throw ValidationError("weight for '" + ground.label(i) + "' is " +
                            rational_to_string(weights[i]) + ", must be in (0,1]");
    }
    total += weights[i];
  }
  if (total <= 2) {
    throw ValidationError("total weight " + rational_to_string(total) +
                          " must exceed 2");
  }
}

SimplicialComplex::SimplicialComplex(GroundSet ground, std::vector<Mask> facets)
    : ground_(std::move(ground)), facets_(std::move(facets)) {
  // Canonicalize: dedupe, drop nested sets, sort.
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  std::vector<Mask> maximal;
  for (Mask f : facets_) {
    bool nested = false;
    for (Mask g : facets_)
      if (g != f && (f & ~g) == 0) {
        nested = true;
        break;
      }
    if (!nested) maximal.push_back(f);
  }
  facets_ = std::move(maximal);
  std::sort(facets_.begin(), facets_.end(), mask_lex_less);

  for (int i = 0; i < ground_.size(); ++i) {
    if (!contains(bit(i))) {
      throw ValidationError("singleton {" + ground_.label(i) +
                            "} is not a face; every marking must be allowed "
                            "to occupy its own location");
    }
  }
}

SimplicialComplex SimplicialComplex::discrete(GroundSet ground) {
  std::vector<Mask> facets;
  for (int i = 0; i < ground.size(); ++i) facets.push_back(bit(i));
  return SimplicialComplex(std::move(ground), std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(GroundSet ground,
                                                 std::vector<Mask> facets) {
  Mask full = ground.full_mask();
  for (Mask f : facets) {
    if (f & ~full) throw ValidationError("facet contains labels outside the ground set");
    if (f == 0) throw ValidationError("empty facet");
  }
  return SimplicialComplex(std::move(ground), std::move(facets));
}

SimplicialComplex SimplicialComplex::from_hassett(const HassettWeights& hw) {
  const GroundSet& g = hw.ground;
  int n = g.size();
  // Collect faces by the defining inequality, then adjoin singletons.
  std::vector<char> face(std::size_t{1} << n, 0);
  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    mpq_class sum = 0;
    for (int i = 0; i < n; ++i)
      if (t & bit(i)) sum += hw.weights[i];
    face[t] = (sum < 1);
  }
  for (int i = 0; i < n; ++i) face[bit(i)] = 1;
  std::vector<Mask> facets;
  for (Mask t = 1; t < (Mask{1} << n); ++t) {
    if (!face[t]) continue;
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i)
      if (!(t & bit(i)) && face[t | bit(i)]) maximal = false;
    if (maximal) facets.push_back(t);
  }
  return SimplicialComplex(g, std::move(facets));
}

bool SimplicialComplex::contains(Mask t) const {
  if (t & ~ground_.full_mask()) {
    throw ValidationError("set contains labels outside the ground set");
  }
  for (Mask f : facets_)
    if ((t & ~f) == 0) return true;
  return false;
}

bool SimplicialComplex::at_least_triparted() const {
  Mask full = ground_.full_mask();
  if (contains(full)) return false;
  for (Mask f : facets_)
    if (contains(full & ~f)) return false;
  return true;
}

std::vector<Mask> SimplicialComplex::faces() const {
  if (ground_.size() > 24) throw SizeGuardError("face enumeration beyond 24 labels");
  std::vector<char> seen(std::size_t{1} << ground_.size(), 0);
  std::vector<Mask> out;
  for (Mask f : facets_) {
    // Walk all submasks of f.
    Mask s = f;
    while (true) {
      if (!seen[s]) {
        seen[s] = 1;
        out.push_back(s);
      }
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

}  // namespace m0k
