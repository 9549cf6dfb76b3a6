#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "m0k/linalg.hpp"
#include "m0k/ring.hpp"

namespace m0k {

struct RelationSet {
  /// Generator index pairs (i < j) with disjoint closed strata.
  std::vector<std::pair<int, int>> quadratic;
  /// Degree-1 elements: all three pairing differences per 4-subset of S.
  std::vector<RingElement> linear;
};

struct GradedGroup {
  int rank = 0;
  std::vector<mpz_class> torsion;  // elementary divisors > 1, ascending
  bool operator==(const GradedGroup&) const = default;
};

struct PoincareProfile {
  std::vector<GradedGroup> groups;  // degrees 0..#S-3
  std::vector<int> ranks() const {
    std::vector<int> out;
    for (const auto& g : groups) out.push_back(g.rank);
    return out;
  }
  bool torsion_free() const {
    for (const auto& g : groups)
      if (!g.torsion.empty()) return false;
    return true;
  }
};

struct PresentationOptions {
  long warn_rows = 1'000'000;  // stderr note above this many relation rows
};

/// The presented ring: free commutative ring on the boundary divisors
/// modulo disjointness products and the degree-1 pairing relations, with
/// exact integer graded structure.
///
/// Degree-d components are computed as cokernels: columns are the degree-d
/// monomials whose support is pairwise non-disjoint (monomials containing a
/// disjoint pair are unit relation rows, so eliminating them up front is an
/// exact change of basis), rows are a lattice basis of the degree-1
/// relations times all admissible degree-(d-1) monomials.
class Presentation {
 public:
  using Options = PresentationOptions;

  explicit Presentation(SimplicialComplex k, Options opt = {});

  const SimplicialComplex& complex() const { return k_; }
  const GroundSet& ground() const { return k_.ground(); }
  const GeneratorTable& generators() const { return gens_; }
  int top_degree() const { return ground().size() - 3; }

  /// False iff the closed strata of the two generators are disjoint.
  bool meets(int i, int j) const { return meets_[i][j]; }

  /// Pairing difference via the separation predicate.
  RingElement wdvv(int i, int j, int k, int l) const;
  /// The same element assembled from the D/E description directly.
  RingElement wdvv_keel_form(int i, int j, int k, int l) const;

  const RelationSet& relation_set() const { return relations_; }

  GradedGroup graded_rank(int d) const;
  PoincareProfile poincare_profile(int threads = 1) const;

  /// Canonical representative modulo the relation lattice, degree by
  /// degree; idempotent, and equal on x, y iff x - y is in the lattice.
  RingElement normal_form(const RingElement& x) const;

  /// Exact product in the ring: free product, degrees above the top drop
  /// to zero, then normal form.
  RingElement multiply(const RingElement& x, const RingElement& y) const;

  /// Class of a stratum: product of one Pi per split and, per block of
  /// size m >= 2, the m-1 Sigmas pairing its least label with the others.
  RingElement stratum_class(const KStableGraph& graph) const;

  /// Image of a two-sided divisor class under the contraction: the Pi, the
  /// Sigma, or zero, depending on which side (if any) is a face.
  RingElement pushforward_divisor(Mask i) const;

 private:
  struct DegreeData {
    std::vector<Monomial> columns;  // descending canonical order
    std::unordered_map<std::string, int> colmap;
    HermiteForm hnf{0};
    GradedGroup group;
  };

  static std::string key_of(const Monomial& m);
  const std::vector<Monomial>& admissible(int d) const;
  const DegreeData& degree_data(int d) const;
  DegreeData build_degree(int d) const;
  void require_distinct(int i, int j, int k, int l) const;

  SimplicialComplex k_;
  Options opt_;
  GeneratorTable gens_;
  std::vector<std::vector<char>> meets_;
  RelationSet relations_;
  std::vector<std::vector<std::pair<int, mpz_class>>> basis_;  // degree-1 lattice basis

  mutable std::mutex mu_;
  mutable std::unordered_map<int, std::vector<Monomial>> adm_cache_;
  mutable std::unordered_map<int, std::unique_ptr<DegreeData>> degree_cache_;
};

}  // namespace m0k
