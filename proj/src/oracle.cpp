#include "m0k/oracle.hpp"

#include <thread>

#include "m0k/errors.hpp"

namespace m0k {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

mpz_class PointCountPolynomial::eval(long q) const {
  mpz_class out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * q + *it;
  return out;
}

long open_moduli_count(int n, long q) {
  if (n < 3) throw ValidationError("a vertex carries at least 3 half-edges");
  if (q < n - 1)
    throw ValidationError("field size " + std::to_string(q) +
                          " too small for " + std::to_string(n) + " points");
  long out = 1;
  for (long i = 2; i <= n - 2; ++i) {
    out *= q - i;
    if (out < 0 || out > (1LL << 62))
      throw SizeGuardError("point count exceeds the integer range");
  }
  return out;
}

long count_points(const std::vector<KStableGraph>& graphs, long q) {
  long total = 0;
  for (const auto& graph : graphs) {
    long stratum = 1;
    for (const auto& v : vertices(graph)) stratum *= open_moduli_count(v.n_half_edges(), q);
    total += stratum;
    if (total < 0) throw SizeGuardError("point count exceeds the integer range");
  }
  return total;
}

long count_points(const SimplicialComplex& k, long q) {
  if (q < k.ground().size() - 1)
    throw ValidationError("field size must be at least #S - 1");
  return count_points(enumerate_graphs(k, std::nullopt), q);
}

std::vector<long> evaluation_primes(int nlabels, int count) {
  std::vector<long> out;
  for (long p = nlabels - 1; static_cast<int>(out.size()) < count; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

PointCountPolynomial interpolate_profile(const SimplicialComplex& k, int threads) {
  const int n = k.ground().size();
  const int deg = n - 3;
  auto graphs = enumerate_graphs(k, std::nullopt);
  auto primes = evaluation_primes(n, deg + 3);  // grid plus two fresh checks

  std::vector<mpz_class> values(primes.size());
  auto eval_range = [&](std::size_t from, std::size_t step) {
    for (std::size_t i = from; i < primes.size(); i += step)
      values[i] = count_points(graphs, primes[i]);
  };
  if (threads > 1) {
    std::vector<std::thread> pool;
    int nthreads = std::min<std::size_t>(threads, primes.size());
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(eval_range, t, nthreads);
    for (auto& th : pool) th.join();
  } else {
    eval_range(0, 1);
  }

  // Exact Vandermonde solve over the rationals.
  int m = deg + 1;
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
  for (int i = 0; i < m; ++i) {
    mpq_class power = 1;
    for (int j = 0; j < m; ++j) {
      a[i][j] = power;
      power *= primes[i];
    }
    a[i][m] = mpq_class(values[i]);
  }
  for (int col = 0; col < m; ++col) {
    int p = col;
    while (a[p][col] == 0) ++p;  // Vandermonde: always solvable
    std::swap(a[col], a[p]);
    for (int i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[col][col];
      for (int j = col; j <= m; ++j) a[i][j] -= f * a[col][j];
    }
  }
  PointCountPolynomial poly;
  for (int i = 0; i < m; ++i) {
    mpq_class c = a[i][m] / a[i][i];
    if (c.get_den() != 1)
      throw InternalError("point counts did not interpolate to integer coefficients");
    poly.coeffs.push_back(c.get_num());
  }

  if (poly.coeffs.front() != 1 || poly.coeffs.back() != 1)
    throw InternalError("point-count polynomial must have constant and leading term 1");
  for (int d = 0; d <= deg; ++d) {
    if (poly.coeffs[d] < 0)
      throw InternalError("point-count polynomial has a negative coefficient");
    if (poly.coeffs[d] != poly.coeffs[deg - d])
      throw InternalError("point-count polynomial is not palindromic");
  }
  for (std::size_t i = m; i < primes.size(); ++i)
    if (poly.eval(primes[i]) != values[i])
      throw InternalError("interpolated polynomial fails at a fresh prime");
  return poly;
}

}  // namespace m0k
