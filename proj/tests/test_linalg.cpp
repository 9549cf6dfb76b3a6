#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "m0k/linalg.hpp"

using namespace m0k;

namespace {

std::vector<std::vector<mpz_class>> dense_of(const std::vector<SparseRow>& rows,
                                             int ncols) {
  std::vector<std::vector<mpz_class>> out(rows.size(), std::vector<mpz_class>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) out[i][c] = v;
  return out;
}

SparseRow sparse_of(std::initializer_list<long> vals) {
  SparseRow r;
  int c = 0;
  for (long v : vals) {
    if (v != 0) r.emplace_back(c, v);
    ++c;
  }
  return r;
}

// Independent rank oracle: fraction-free rational elimination.
int rational_rank(std::vector<std::vector<mpq_class>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<SparseRow> random_rows(std::mt19937& rng, int nrows, int ncols, int span) {
  std::vector<SparseRow> rows;
  for (int i = 0; i < nrows; ++i) {
    SparseRow r;
    for (int c = 0; c < ncols; ++c) {
      int v = static_cast<int>(rng() % (2 * span + 1)) - span;
      if (v != 0) r.emplace_back(c, v);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<mpz_class> cokernel_torsion_by_smith(const std::vector<SparseRow>& rows,
                                                 int ncols) {
  auto diag = smith_diagonal(dense_of(rows, ncols));
  std::vector<mpz_class> out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("smith diagonal on known matrices") {
  CHECK(smith_diagonal({{mpz_class(2), mpz_class(4)}, {mpz_class(6), mpz_class(8)}}) ==
        std::vector<mpz_class>{2, 4});
  CHECK(smith_diagonal({{mpz_class(1), mpz_class(0)}, {mpz_class(0), mpz_class(1)}}) ==
        std::vector<mpz_class>{1, 1});
  CHECK(smith_diagonal({{mpz_class(0), mpz_class(0)}}) == std::vector<mpz_class>{0});
  // 1x3 row (6, 10, 15): gcd 1.
  CHECK(smith_diagonal({{mpz_class(6), mpz_class(10), mpz_class(15)}}) ==
        std::vector<mpz_class>{1});
  // Divisibility chain d1 | d2.
  auto d = smith_diagonal({{mpz_class(2), mpz_class(0)}, {mpz_class(0), mpz_class(3)}});
  CHECK(d == std::vector<mpz_class>{1, 6});
}

TEST_CASE("hermite form basics") {
  auto h = HermiteForm::of(3, {sparse_of({1, -1, 0}), sparse_of({1, 0, -1}),
                               sparse_of({0, 1, -1})});
  CHECK(h.rank() == 2);
  CHECK(h.torsion().empty());
  std::vector<mpz_class> v(3);
  v[1] = 1;  // second unit vector
  h.reduce(v);
  // Reduction rewrites it into the non-pivot coordinate.
  CHECK(v[0] == 0);
  std::vector<mpz_class> sum(3);
  sum[0] = 1;
  sum[1] = 1;
  sum[2] = 1;
  auto before = sum;
  h.reduce(sum);
  // v = (1,1,1) is not in the lattice (row sums are zero), so it survives.
  CHECK(sum != std::vector<mpz_class>(3));
  (void)before;
}

TEST_CASE("hermite form detects torsion") {
  // Lattice spanned by (2,0) and (0,1) in Z^2: cokernel Z/2.
  auto h = HermiteForm::of(2, {sparse_of({2, 0}), sparse_of({0, 1})});
  CHECK(h.rank() == 2);
  CHECK(h.torsion() == std::vector<mpz_class>{2});

  // (2,1) alone: cokernel Z, no torsion (pivot 2 but unimodular completion).
  auto h2 = HermiteForm::of(2, {sparse_of({2, 1})});
  CHECK(h2.rank() == 1);
  CHECK(h2.torsion().empty());
}

TEST_CASE("canonical form is insertion-order independent") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int ncols = 2 + static_cast<int>(rng() % 6);
    int nrows = 1 + static_cast<int>(rng() % 8);
    auto rows = random_rows(rng, nrows, ncols, 4);
    auto h1 = HermiteForm::of(ncols, rows);
    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto h2 = HermiteForm::of(ncols, shuffled);
    CHECK(h1.basis() == h2.basis());
  }
}

TEST_CASE("hermite rank matches rational elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int ncols = 2 + static_cast<int>(rng() % 6);
    int nrows = 1 + static_cast<int>(rng() % 8);
    auto rows = random_rows(rng, nrows, ncols, 5);
    auto h = HermiteForm::of(ncols, rows);
    std::vector<std::vector<mpq_class>> q(rows.size(), std::vector<mpq_class>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, v] : rows[i]) q[i][c] = mpq_class(v);
    CHECK(h.rank() == rational_rank(q));
  }
}

TEST_CASE("hermite torsion matches direct smith form") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int ncols = 1 + static_cast<int>(rng() % 5);
    int nrows = 1 + static_cast<int>(rng() % 6);
    // Small entries with occasional scaling to provoke torsion.
    auto rows = random_rows(rng, nrows, ncols, 3);
    if (trial % 3 == 0)
      for (auto& r : rows)
        for (auto& [c, v] : r)
          if (c % 2 == 0) v *= 2;
    auto h = HermiteForm::of(ncols, rows);
    CHECK(h.torsion() == cokernel_torsion_by_smith(rows, ncols));
  }
}

TEST_CASE("reduce is idempotent and constant on lattice cosets") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int ncols = 2 + static_cast<int>(rng() % 6);
    auto rows = random_rows(rng, 2 + static_cast<int>(rng() % 5), ncols, 4);
    auto h = HermiteForm::of(ncols, rows);

    std::vector<mpz_class> v(ncols);
    for (auto& x : v) x = static_cast<int>(rng() % 9) - 4;
    auto r1 = v;
    h.reduce(r1);
    auto r2 = r1;
    h.reduce(r2);
    CHECK(r1 == r2);

    // Shift by a random lattice element.
    auto shifted = v;
    for (const auto& row : rows) {
      int c = static_cast<int>(rng() % 3) - 1;
      for (const auto& [col, val] : row) shifted[col] += c * val;
    }
    h.reduce(shifted);
    CHECK(shifted == r1);

    // Every input row is in the lattice.
    for (const auto& row : rows) {
      std::vector<mpz_class> w(ncols);
      for (const auto& [col, val] : row) w[col] = val;
      h.reduce(w);
      CHECK(w == std::vector<mpz_class>(ncols));
    }
  }
}
