#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m0k/graph.hpp"

namespace m0k {

/// Product of boundary-divisor generators: a sorted multiset of generator
/// ids.  Ordered by degree, then lexicographically on the factor list.
struct Monomial {
  std::vector<int> factors;

  static Monomial unit() { return {}; }
  static Monomial generator(int id) { return {{id}}; }

  int degree() const { return static_cast<int>(factors.size()); }
  Monomial times(const Monomial& o) const;
  Monomial times_generator(int id) const;

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const {
    if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
    return factors < o.factors;
  }
};

/// Integer formal sum of monomials; no zero coefficients stored.
class RingElement {
 public:
  static RingElement zero() { return {}; }
  static RingElement unit(mpz_class c = 1);
  static RingElement generator(int id, mpz_class c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }

  /// Adds c * m, erasing the term if the coefficient cancels.
  void add(const Monomial& m, const mpz_class& c);

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;

  /// Product in the free polynomial ring; no relations applied.
  RingElement free_product(const RingElement& o) const;

  /// Degrees that actually occur, ascending.
  std::vector<int> degrees() const;
  RingElement graded_component(int d) const;
  int max_degree() const;  // -1 for zero

  bool operator==(const RingElement&) const = default;

 private:
  std::map<Monomial, mpz_class> terms_;
};

/// Boundary divisors in canonical order (all Pi by lexicographic canonical
/// side, then all Sigma lexicographic), with lookups both ways.
class GeneratorTable {
 public:
  explicit GeneratorTable(const SimplicialComplex& k);

  int size() const { return static_cast<int>(table_.size()); }
  const BoundaryDivisor& divisor(int id) const { return table_.at(id); }
  const std::vector<BoundaryDivisor>& all() const { return table_; }

  std::optional<int> find_pi(Mask canonical_side) const;
  std::optional<int> find_sigma(int s, int t) const;
  std::optional<int> find_graph(const KStableGraph& graph) const;
  std::optional<int> find_name(const std::string& name) const;

  std::string name(int id) const;

 private:
  const GroundSet* ground_;
  std::vector<BoundaryDivisor> table_;
  std::map<Mask, int> by_pi_;
  std::map<std::pair<int, int>, int> by_sigma_;
  std::map<KStableGraph, int> by_graph_;
};

/// "+Pi{1,2} -2*Sigma{1,2}*Pi{1,3}^2" style rendering, terms in canonical
/// monomial order; "0" for the zero element.
std::string format_element(const RingElement& x, const GeneratorTable& table);

}  // namespace m0k
