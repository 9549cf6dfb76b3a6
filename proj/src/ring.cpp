#include "m0k/ring.hpp"

#include <algorithm>

#include "m0k/errors.hpp"

namespace m0k {

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors.resize(factors.size() + o.factors.size());
  std::merge(factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
             out.factors.begin());
  return out;
}

Monomial Monomial::times_generator(int id) const {
  Monomial out = *this;
  out.factors.insert(std::upper_bound(out.factors.begin(), out.factors.end(), id), id);
  return out;
}

RingElement RingElement::unit(mpz_class c) {
  RingElement x;
  x.add(Monomial::unit(), c);
  return x;
}

RingElement RingElement::generator(int id, mpz_class c) {
  RingElement x;
  x.add(Monomial::generator(id), c);
  return x;
}

void RingElement::add(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, -c);
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out;
  for (const auto& [m, c] : terms_) out.add(m, -c);
  return out;
}

RingElement RingElement::free_product(const RingElement& o) const {
  RingElement out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add(m1.times(m2), c1 * c2);
  return out;
}

std::vector<int> RingElement::degrees() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    if (out.empty() || out.back() != m.degree()) out.push_back(m.degree());
  return out;
}

RingElement RingElement::graded_component(int d) const {
  RingElement out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.add(m, c);
  return out;
}

int RingElement::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

GeneratorTable::GeneratorTable(const SimplicialComplex& k) : ground_(&k.ground()) {
  table_ = divisors(k);
  for (int i = 0; i < size(); ++i) {
    const auto& d = table_[i];
    if (d.kind == BoundaryDivisor::Kind::pi)
      by_pi_.emplace(d.pi_side, i);
    else
      by_sigma_.emplace(std::make_pair(d.s, d.t), i);
    by_graph_.emplace(d.graph, i);
  }
}

std::optional<int> GeneratorTable::find_pi(Mask canonical_side) const {
  auto it = by_pi_.find(canonical_side);
  if (it == by_pi_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GeneratorTable::find_sigma(int s, int t) const {
  if (s > t) std::swap(s, t);
  auto it = by_sigma_.find({s, t});
  if (it == by_sigma_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GeneratorTable::find_graph(const KStableGraph& graph) const {
  auto it = by_graph_.find(graph);
  if (it == by_graph_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GeneratorTable::find_name(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (this->name(i) == name) return i;
  return std::nullopt;
}

std::string GeneratorTable::name(int id) const { return table_.at(id).name(*ground_); }

std::string format_element(const RingElement& x, const GeneratorTable& table) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += ' ';
    out += (c < 0) ? '-' : '+';
    mpz_class mag = abs(c);
    std::string body;
    for (std::size_t i = 0; i < m.factors.size();) {
      std::size_t j = i;
      while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
      if (!body.empty()) body += '*';
      body += table.name(m.factors[i]);
      if (j - i > 1) body += '^' + std::to_string(j - i);
      i = j;
    }
    if (body.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += body;
    }
  }
  return out;
}

}  // namespace m0k
