#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "m0k/complex.hpp"
#include "m0k/reference.hpp"
#include "m0k/errors.hpp"
#include "m0k/rational.hpp"

using namespace m0k;

namespace {

GroundSet numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(labels);
}

Mask mask_of(const GroundSet& g, std::initializer_list<const char*> labels) {
  Mask m = 0;
  for (const char* l : labels) m |= bit(g.index(l));
  return m;
}

SimplicialComplex hassett(int n, std::initializer_list<const char*> weights) {
  std::vector<mpq_class> w;
  for (const char* t : weights) w.push_back(parse_rational(t));
  return SimplicialComplex::from_hassett(HassettWeights(numbered(n), std::move(w)));
}

}  // namespace

TEST_CASE("ground set validation") {
  CHECK_THROWS_AS(GroundSet({"1", "2"}), ValidationError);
  CHECK_THROWS_AS(GroundSet({"1", "2", "1"}), ValidationError);
  GroundSet g = numbered(4);
  CHECK(g.size() == 4);
  CHECK(g.index("3") == 2);
  CHECK_THROWS_AS(g.index("7"), ValidationError);
  CHECK(g.format_mask(0b1010) == "{2,4}");
}

TEST_CASE("mask lex order") {
  // {1,2} < {1,2,3} < {1,3}
  CHECK(mask_lex_less(0b011, 0b111));
  CHECK(mask_lex_less(0b111, 0b101));
  CHECK(mask_lex_less(0b011, 0b101));
  CHECK(!mask_lex_less(0b101, 0b011));
  CHECK(!mask_lex_less(0b011, 0b011));
  CHECK(mask_lex_less(0, 0b1));
}

TEST_CASE("contains") {
  GroundSet g = numbered(4);
  auto k = SimplicialComplex::from_facets(
      g, {mask_of(g, {"1", "2"}), mask_of(g, {"3"}), mask_of(g, {"4"})});
  CHECK(k.contains(mask_of(g, {"1"})));
  CHECK(k.contains(mask_of(g, {"1", "2"})));
  CHECK(!k.contains(mask_of(g, {"1", "3"})));
  CHECK(k.contains(0));
  CHECK_THROWS_AS(k.contains(Mask{1} << 10), ValidationError);
}

TEST_CASE("contains is monotone") {
  GroundSet g = numbered(5);
  auto k = SimplicialComplex::from_facets(
      g, {mask_of(g, {"1", "2", "3"}), mask_of(g, {"3", "4"}), mask_of(g, {"5"})});
  for (Mask t = 0; t <= g.full_mask(); ++t) {
    if (!k.contains(t)) continue;
    Mask s = t;
    while (true) {
      CHECK(k.contains(s));
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
}

TEST_CASE("facet canonicalization drops nested sets") {
  GroundSet g = numbered(4);
  auto k = SimplicialComplex::from_facets(
      g, {mask_of(g, {"1", "2"}), mask_of(g, {"1"}), mask_of(g, {"3"}),
          mask_of(g, {"4"}), mask_of(g, {"1", "2"})});
  CHECK(k.facets() == std::vector<Mask>{mask_of(g, {"1", "2"}), mask_of(g, {"3"}),
                                        mask_of(g, {"4"})});
}

TEST_CASE("missing singleton is rejected") {
  GroundSet g = numbered(4);
  CHECK_THROWS_WITH_AS(
      SimplicialComplex::from_facets(g, {mask_of(g, {"1", "2"}), mask_of(g, {"3"})}),
      doctest::Contains("{4}"), ValidationError);
}

TEST_CASE("at_least_triparted examples") {
  GroundSet g = numbered(4);
  CHECK(SimplicialComplex::discrete(g).at_least_triparted());
  auto two_parts = SimplicialComplex::from_facets(
      g, {mask_of(g, {"1", "2"}), mask_of(g, {"3", "4"})});
  CHECK(!two_parts.at_least_triparted());
  auto full = SimplicialComplex::from_facets(g, {g.full_mask()});
  CHECK(!full.at_least_triparted());
}

TEST_CASE("triparted agrees with brute-force partition enumeration") {
  // All complexes generated from random facet families on up to 6 labels.
  std::mt19937 rng(20240811);
  for (int n = 3; n <= 6; ++n) {
    GroundSet g = numbered(n);
    for (int trial = 0; trial < 120; ++trial) {
      std::vector<Mask> facets;
      for (int i = 0; i < n; ++i) facets.push_back(bit(i));
      int extra = static_cast<int>(rng() % 4);
      for (int e = 0; e < extra; ++e) facets.push_back(static_cast<Mask>(rng()) & g.full_mask());
      std::vector<Mask> clean;
      for (Mask f : facets)
        if (f != 0) clean.push_back(f);
      auto k = SimplicialComplex::from_facets(g, clean);
      CHECK(k.at_least_triparted() == (reference::min_face_partition_parts(k) >= 3));
    }
  }
}

TEST_CASE("hassett examples") {
  GroundSet g5 = numbered(5);
  auto lm = hassett(5, {"1", "1", "1/4", "1/4", "1/4"});
  CHECK(lm.facets() == std::vector<Mask>{mask_of(g5, {"1"}), mask_of(g5, {"2"}),
                                         mask_of(g5, {"3", "4", "5"})});

  auto heavy = hassett(4, {"1", "1", "1", "1"});
  CHECK(heavy == SimplicialComplex::discrete(numbered(4)));

  // Pairs summing to exactly 1 are not faces: the inequality is strict.
  auto halves = hassett(5, {"1/2", "1/2", "1/2", "1/2", "1"});
  CHECK(halves == SimplicialComplex::discrete(numbered(5)));
}

TEST_CASE("hassett validation") {
  CHECK_THROWS_AS(hassett(4, {"1", "1", "1", "0"}), ValidationError);
  CHECK_THROWS_AS(hassett(4, {"1", "1", "1", "3/2"}), ValidationError);
  // Total weight must exceed 2.
  CHECK_THROWS_AS(hassett(4, {"1/2", "1/2", "1/2", "1/2"}).ground(), ValidationError);
  CHECK_THROWS_AS(hassett(4, {"1", "1", "1"}), ValidationError);
}

TEST_CASE("hassett is monotone in weights") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    std::vector<mpq_class> lo, hi;
    for (int i = 0; i < n; ++i) {
      int num = 1 + static_cast<int>(rng() % 8);
      mpq_class h(num, 8);
      int dec = static_cast<int>(rng() % num);
      mpq_class l(num - dec, 8);
      lo.push_back(l);
      hi.push_back(h);
    }
    mpq_class lo_total = std::accumulate(lo.begin(), lo.end(), mpq_class(0));
    mpq_class hi_total = std::accumulate(hi.begin(), hi.end(), mpq_class(0));
    if (lo_total <= 2 || hi_total <= 2) continue;
    auto k_lo = SimplicialComplex::from_hassett(HassettWeights(numbered(n), lo));
    auto k_hi = SimplicialComplex::from_hassett(HassettWeights(numbered(n), hi));
    // Smaller weights allow more collisions: every face of k_hi is a face of k_lo.
    for (Mask f : k_hi.facets()) CHECK(k_lo.contains(f));
  }
}

TEST_CASE("hassett rejects malformed rationals") {
  CHECK_THROWS_AS(parse_rational("0.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK_THROWS_AS(parse_rational("1e-2"), ValidationError);
  CHECK(parse_rational("2/4") == mpq_class(1, 2));
  CHECK(rational_to_string(parse_rational("3/1")) == "3");
}

TEST_CASE("discrete complex is triparted for any ground size") {
  for (int n = 3; n <= 8; ++n) {
    CHECK(SimplicialComplex::discrete(numbered(n)).at_least_triparted());
  }
}

TEST_CASE("faces enumeration") {
  GroundSet g = numbered(4);
  auto k = SimplicialComplex::from_facets(
      g, {mask_of(g, {"1", "2"}), mask_of(g, {"3"}), mask_of(g, {"4"})});
  auto f = k.faces();
  CHECK(f.size() == 6);  // {}, {1}, {1,2}, {2}, {3}, {4}
  CHECK(f.front() == 0);
}
