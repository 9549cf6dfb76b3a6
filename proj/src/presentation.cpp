#include "m0k/presentation.hpp"

#include <algorithm>
#include <iostream>
#include <thread>

#include "m0k/errors.hpp"

namespace m0k {

Presentation::Presentation(SimplicialComplex k, Options opt)
    : k_(std::move(k)), opt_(opt), gens_(k_) {
  if (!k_.at_least_triparted())
    throw ValidationError("complex is not at least triparted");
  const int g = gens_.size();

  meets_.assign(g, std::vector<char>(g, 1));
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      bool m = !generic_meet(k_, gens_.divisor(i).graph, gens_.divisor(j).graph).empty();
      meets_[i][j] = meets_[j][i] = m;
      if (!m) relations_.quadratic.emplace_back(i, j);
    }

  const int n = ground().size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          relations_.linear.push_back(wdvv(a, b, c, d));
          relations_.linear.push_back(wdvv(a, b, d, c));
          relations_.linear.push_back(wdvv(a, c, d, b));
        }

  auto deg1 = std::make_unique<DegreeData>(build_degree(1));
  for (const auto& row : deg1->hnf.basis()) {
    std::vector<std::pair<int, mpz_class>> b;
    for (const auto& [col, val] : row)
      b.emplace_back(deg1->columns[col].factors[0], val);
    basis_.push_back(std::move(b));
  }
  degree_cache_.emplace(1, std::move(deg1));
}

void Presentation::require_distinct(int i, int j, int k, int l) const {
  int ids[4] = {i, j, k, l};
  for (int a = 0; a < 4; ++a) {
    if (ids[a] < 0 || ids[a] >= ground().size())
      throw ValidationError("label index out of range");
    for (int b = a + 1; b < 4; ++b)
      if (ids[a] == ids[b]) throw ValidationError("labels must be distinct");
  }
}

RingElement Presentation::wdvv(int i, int j, int k, int l) const {
  require_distinct(i, j, k, l);
  RingElement out;
  for (int id = 0; id < gens_.size(); ++id) {
    const auto& graph = gens_.divisor(id).graph;
    if (separates(ground(), graph, i, j, k, l)) out.add(Monomial::generator(id), 1);
    if (separates(ground(), graph, i, k, j, l)) out.add(Monomial::generator(id), -1);
  }
  return out;
}

RingElement Presentation::wdvv_keel_form(int i, int j, int k, int l) const {
  require_distinct(i, j, k, l);
  RingElement out;
  auto sigma = [&](int s, int t, int sign) {
    if (auto id = gens_.find_sigma(s, t)) out.add(Monomial::generator(*id), sign);
  };
  sigma(i, j, 1);
  sigma(k, l, 1);
  sigma(i, k, -1);
  sigma(j, l, -1);
  for (int id = 0; id < gens_.size(); ++id) {
    const auto& d = gens_.divisor(id);
    if (d.kind != BoundaryDivisor::Kind::pi) continue;
    auto splits_pairs = [&](int a, int b, int c, int e) {
      Mask ab = bit(a) | bit(b), ce = bit(c) | bit(e);
      return ((ab & ~d.pi_side) == 0 && (ce & d.pi_side) == 0) ||
             ((ce & ~d.pi_side) == 0 && (ab & d.pi_side) == 0);
    };
    if (splits_pairs(i, j, k, l)) out.add(Monomial::generator(id), 1);
    if (splits_pairs(i, k, j, l)) out.add(Monomial::generator(id), -1);
  }
  return out;
}

std::string Presentation::key_of(const Monomial& m) {
  std::string key;
  for (int f : m.factors) {
    key += std::to_string(f);
    key += '.';
  }
  return key;
}

const std::vector<Monomial>& Presentation::admissible(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = adm_cache_.find(d);
  if (it != adm_cache_.end()) return it->second;

  std::vector<Monomial> out;
  if (d == 0) {
    out.push_back(Monomial::unit());
  } else {
    std::vector<int> cur;
    std::vector<int> initial(gens_.size());
    for (int i = 0; i < gens_.size(); ++i) initial[i] = i;
    auto rec = [&](auto&& self, const std::vector<int>& cands) -> void {
      if (static_cast<int>(cur.size()) == d) {
        out.push_back(Monomial{cur});
        return;
      }
      for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        int v = cands[idx];
        std::vector<int> next;
        for (std::size_t j = idx; j < cands.size(); ++j)
          if (meets_[v][cands[j]]) next.push_back(cands[j]);
        cur.push_back(v);
        self(self, next);
        cur.pop_back();
      }
    };
    rec(rec, initial);
  }
  return adm_cache_.emplace(d, std::move(out)).first->second;
}

Presentation::DegreeData Presentation::build_degree(int d) const {
  DegreeData dd;
  const auto& asc = admissible(d);
  dd.columns.assign(asc.rbegin(), asc.rend());
  int ncols = static_cast<int>(dd.columns.size());
  for (int c = 0; c < ncols; ++c) dd.colmap.emplace(key_of(dd.columns[c]), c);

  std::vector<SparseRow> rows;
  if (d == 1) {
    for (const auto& rel : relations_.linear) {
      SparseRow row;
      for (const auto& [m, c] : rel.terms()) row.emplace_back(dd.colmap.at(key_of(m)), c);
      std::sort(row.begin(), row.end());
      if (!row.empty()) rows.push_back(std::move(row));
    }
  } else if (d >= 2) {
    for (const auto& mprime : admissible(d - 1)) {
      for (const auto& b : basis_) {
        SparseRow row;
        for (const auto& [gen, coeff] : b) {
          auto it = dd.colmap.find(key_of(mprime.times_generator(gen)));
          if (it != dd.colmap.end()) row.emplace_back(it->second, coeff);
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (static_cast<long>(rows.size()) > opt_.warn_rows)
    std::cerr << "note: degree " << d << " relation matrix has " << rows.size()
              << " rows x " << ncols << " columns\n";

  dd.hnf = HermiteForm::of(ncols, rows);
  dd.group.rank = ncols - dd.hnf.rank();
  dd.group.torsion = dd.hnf.torsion();
  if (d > top_degree() && (dd.group.rank != 0 || !dd.group.torsion.empty()))
    throw InternalError("nonzero component above the top degree");
  return dd;
}

const Presentation::DegreeData& Presentation::degree_data(int d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = degree_cache_.find(d);
    if (it != degree_cache_.end()) return *it->second;
  }
  auto built = std::make_unique<DegreeData>(build_degree(d));
  std::lock_guard<std::mutex> lock(mu_);
  return *degree_cache_.emplace(d, std::move(built)).first->second;
}

GradedGroup Presentation::graded_rank(int d) const {
  if (d < 0) throw ValidationError("degree must be nonnegative");
  return degree_data(d).group;
}

PoincareProfile Presentation::poincare_profile(int threads) const {
  PoincareProfile profile;
  int top = top_degree();
  degree_data(0);
  if (top >= 1) degree_data(1);
  if (threads > 1 && top >= 3) {
    // Degrees are independent; admissible-list warmup avoids duplicate work.
    for (int d = 1; d <= top; ++d) admissible(d);
    std::vector<std::thread> pool;
    int nthreads = std::min(threads, top - 1);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t]() {
        for (int d = 2 + t; d <= top; d += nthreads) degree_data(d);
      });
    for (auto& th : pool) th.join();
  }
  for (int d = 0; d <= top; ++d) profile.groups.push_back(degree_data(d).group);
  return profile;
}

RingElement Presentation::normal_form(const RingElement& x) const {
  RingElement out;
  for (int d : x.degrees()) {
    const DegreeData& dd = degree_data(d);
    std::vector<mpz_class> v(dd.columns.size());
    RingElement component = x.graded_component(d);
    for (const auto& [m, c] : component.terms()) {
      auto it = dd.colmap.find(key_of(m));
      if (it == dd.colmap.end()) continue;  // contains a disjoint pair: zero
      v[it->second] = c;
    }
    dd.hnf.reduce(v);
    for (std::size_t col = 0; col < v.size(); ++col)
      if (v[col] != 0) out.add(dd.columns[col], v[col]);
  }
  return out;
}

RingElement Presentation::multiply(const RingElement& x, const RingElement& y) const {
  RingElement product = x.free_product(y);
  RingElement truncated;
  for (const auto& [m, c] : product.terms())
    if (m.degree() <= top_degree()) truncated.add(m, c);
  return normal_form(truncated);
}

RingElement Presentation::stratum_class(const KStableGraph& graph) const {
  auto report = validate(k_, graph);
  if (!report.valid()) {
    std::string what = "stratum_class of an invalid graph";
    for (const auto& s : report.structural) what += "; " + s;
    for (const auto& s : report.messages) what += "; " + s;
    throw ValidationError(what);
  }
  std::vector<int> factors;
  for (Mask side : graph.splits) {
    auto id = gens_.find_pi(ground().complement(side));
    if (!id) throw InternalError("split of a valid graph is not a divisor");
    factors.push_back(*id);
  }
  for (Mask block : graph.blocks) {
    if (popcount(block) < 2) continue;
    int b0 = lowest_bit(block);
    for (int other : ground().indices_of(block & ~bit(b0))) {
      auto id = gens_.find_sigma(b0, other);
      if (!id) throw InternalError("collision pair of a valid graph is not a divisor");
      factors.push_back(*id);
    }
  }
  std::sort(factors.begin(), factors.end());
  RingElement out = RingElement::unit();
  for (int id : factors) out = multiply(out, RingElement::generator(id));
  return out;
}

RingElement Presentation::pushforward_divisor(Mask i) const {
  const GroundSet& g = ground();
  if (i & ~g.full_mask()) throw ValidationError("subset outside the ground set");
  int size = popcount(i);
  if (size < 2 || size > g.size() - 2)
    throw ValidationError("subset size must be between 2 and #S-2");
  Mask ic = g.complement(i);
  if (k_.contains(i)) {
    if (size != 2) return RingElement::zero();
    auto ids = g.indices_of(i);
    return RingElement::generator(*gens_.find_sigma(ids[0], ids[1]));
  }
  if (k_.contains(ic)) {
    if (popcount(ic) != 2) return RingElement::zero();
    auto ids = g.indices_of(ic);
    return RingElement::generator(*gens_.find_sigma(ids[0], ids[1]));
  }
  Mask canonical = (i & 1) ? i : ic;
  auto id = gens_.find_pi(canonical);
  if (!id) throw InternalError("two-sided non-face bipartition is not a divisor");
  return RingElement::generator(*id);
}

}  // namespace m0k
