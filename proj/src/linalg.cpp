#include "m0k/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "m0k/errors.hpp"

namespace m0k {

namespace {

// dst += q * src, sparse merge; zero results dropped.
SparseRow axpy(const SparseRow& dst, const mpz_class& q, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      mpz_class v = q * src[j].second;
      if (v != 0) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      mpz_class v = dst[i].second + q * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

SparseRow scaled(const SparseRow& row, const mpz_class& c) {
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [col, val] : row) out.emplace_back(col, c * val);
  return out;
}

}  // namespace

HermiteForm::HermiteForm(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

HermiteForm HermiteForm::of(int ncols, const std::vector<SparseRow>& rows) {
  HermiteForm h(ncols);
  for (const auto& r : rows) h.insert(r);
  h.canonicalize();
  return h;
}

void HermiteForm::insert(const SparseRow& row) {
  if (row.empty()) return;
  // Dense accumulator; support only ever moves right during reduction.
  std::vector<mpz_class> acc(ncols_);
  for (const auto& [col, val] : row) acc[col] = val;
  int c = row.front().first;

  for (; c < ncols_; ++c) {
    if (sgn(acc[c]) == 0) continue;
    int p = pivot_of_col_[c];
    if (p < 0) {
      SparseRow tail;
      for (int c2 = c; c2 < ncols_; ++c2)
        if (sgn(acc[c2]) != 0) tail.emplace_back(c2, acc[c2]);
      if (sgn(tail.front().second) < 0) tail = scaled(tail, -1);
      pivot_of_col_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(tail));
      canonical_ = false;
      return;
    }
    const mpz_class& a = rows_[p].front().second;
    mpz_class x = acc[c];
    if (mpz_divisible_p(x.get_mpz_t(), a.get_mpz_t())) {
      mpz_class q = -(x / a);
      for (const auto& [col, val] : rows_[p]) acc[col] += q * val;
    } else {
      mpz_class g, u, w;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(),
                 x.get_mpz_t());
      SparseRow tail;
      for (int c2 = c; c2 < ncols_; ++c2)
        if (sgn(acc[c2]) != 0) tail.emplace_back(c2, acc[c2]);
      SparseRow new_pivot = axpy(scaled(rows_[p], u), w, tail);
      SparseRow remainder = axpy(scaled(tail, a / g), -(x / g), rows_[p]);
      for (int c2 = c; c2 < ncols_; ++c2) acc[c2] = 0;
      for (const auto& [col, val] : remainder) acc[col] = val;
      rows_[p] = std::move(new_pivot);
      canonical_ = false;
    }
  }
}

void HermiteForm::canonicalize() {
  if (canonical_) return;
  std::vector<int> order;  // row indices by pivot column, descending
  for (int col = ncols_ - 1; col >= 0; --col)
    if (pivot_of_col_[col] >= 0) order.push_back(pivot_of_col_[col]);

  for (int idx : order) {
    SparseRow& r = rows_[idx];
    int own = r.front().first;
    std::vector<mpz_class> acc(ncols_);
    for (const auto& [col, val] : r) acc[col] = val;
    for (int c = own + 1; c < ncols_; ++c) {
      if (sgn(acc[c]) == 0) continue;
      int p = pivot_of_col_[c];
      if (p < 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), acc[c].get_mpz_t(), rows_[p].front().second.get_mpz_t());
      if (q == 0) continue;
      for (const auto& [col, val] : rows_[p]) acc[col] -= q * val;
    }
    SparseRow reduced;
    for (int c = own; c < ncols_; ++c)
      if (sgn(acc[c]) != 0) reduced.emplace_back(c, acc[c]);
    r = std::move(reduced);
  }
  canonical_ = true;
}

int HermiteForm::rank() const { return static_cast<int>(rows_.size()); }

std::vector<SparseRow> HermiteForm::basis() const {
  if (!canonical_) throw InternalError("basis() requires a canonical form");
  std::vector<SparseRow> out;
  for (int col = 0; col < ncols_; ++col)
    if (pivot_of_col_[col] >= 0) out.push_back(rows_[pivot_of_col_[col]]);
  return out;
}

void HermiteForm::reduce(std::vector<mpz_class>& v) const {
  if (!canonical_) throw InternalError("reduce() requires a canonical form");
  if (static_cast<int>(v.size()) != ncols_)
    throw InternalError("reduce(): vector has the wrong length");
  for (int c = 0; c < ncols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    int p = pivot_of_col_[c];
    if (p < 0) continue;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), rows_[p].front().second.get_mpz_t());
    if (q == 0) continue;
    for (const auto& [col, val] : rows_[p]) v[col] -= q * val;
  }
}

std::vector<mpz_class> HermiteForm::torsion() const {
  if (!canonical_) throw InternalError("torsion() requires a canonical form");
  std::vector<int> big_rows;
  for (int col = 0; col < ncols_; ++col) {
    int p = pivot_of_col_[col];
    if (p >= 0 && rows_[p].front().second != 1) big_rows.push_back(p);
  }
  if (big_rows.empty()) return {};

  // In the canonical form every entry at a pivot-1 column (other than the
  // pivot itself) is 0, so restricting to big-pivot and free columns is an
  // exact change of basis of the ambient lattice.
  std::vector<int> colmap(ncols_, -1);
  int m = 0;
  for (int col = 0; col < ncols_; ++col) {
    int p = pivot_of_col_[col];
    if (p < 0 || rows_[p].front().second != 1) colmap[col] = m++;
  }
  std::vector<std::vector<mpz_class>> dense(big_rows.size(),
                                            std::vector<mpz_class>(m));
  for (std::size_t i = 0; i < big_rows.size(); ++i)
    for (const auto& [col, val] : rows_[big_rows[i]]) {
      if (colmap[col] < 0) throw InternalError("non-canonical row in torsion()");
      dense[i][colmap[col]] = val;
    }
  auto diag = smith_diagonal(std::move(dense));
  std::vector<mpz_class> out;
  for (const auto& d : diag) {
    if (d == 0) throw InternalError("dependent pivot rows in torsion()");
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int n = std::min(rows, cols);
  std::vector<mpz_class> diag;

  for (int t = 0; t < n; ++t) {
    // Locate a minimal-magnitude nonzero entry in the submatrix.
    auto find_pivot = [&]() -> std::pair<int, int> {
      std::pair<int, int> best{-1, -1};
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (sgn(m[i][j]) == 0) continue;
          if (best.first < 0 ||
              mpz_cmpabs(m[i][j].get_mpz_t(),
                         m[best.first][best.second].get_mpz_t()) < 0)
            best = {i, j};
        }
      return best;
    };

    auto [pi, pj] = find_pivot();
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    while (true) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        mpz_class q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Entry (t,t) must divide everything below-right for the chain.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  while (static_cast<int>(diag.size()) < n) diag.push_back(0);
  return diag;
}

}  // namespace m0k
