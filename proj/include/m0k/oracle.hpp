#pragma once

#include <gmpxx.h>

#include <vector>

#include "m0k/complex.hpp"
#include "m0k/graph.hpp"

namespace m0k {

/// Exact point count of the space over F_q, ascending powers of q;
/// degree = #S - 3, leading and constant coefficients 1, palindromic.
struct PointCountPolynomial {
  std::vector<mpz_class> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class eval(long q) const;
  bool operator==(const PointCountPolynomial&) const = default;
};

/// Count of configurations of n distinct points on a line modulo the
/// automorphisms: (q-2)(q-3)...(q-(n-2)); 1 for n = 3.
long open_moduli_count(int n, long q);

/// Sums, over every stratum graph, the product of the per-vertex open
/// counts.  Requires q >= #S - 1 so every factor is a valid count.
long count_points(const SimplicialComplex& k, long q);

/// As count_points, but over a pre-enumerated stratum list.
long count_points(const std::vector<KStableGraph>& graphs, long q);

/// The #S-2 smallest primes >= #S-1: the evaluation grid.
std::vector<long> evaluation_primes(int nlabels, int count);

/// Interpolates count_points at the evaluation grid, checks integrality,
/// the polynomial invariants, and two fresh prime evaluations.  Any
/// failure is an InternalError: it signals a bug or a false modeling
/// assumption, never bad input.
PointCountPolynomial interpolate_profile(const SimplicialComplex& k, int threads = 1);

}  // namespace m0k
