#pragma once

#include <string>
#include <vector>

#include "m0k/oracle.hpp"
#include "m0k/presentation.hpp"

namespace m0k {

struct SelfCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // empty when ok
};

struct SelfTestReport {
  std::vector<SelfCheck> checks;
  std::vector<mpz_class> point_count_coeffs;
  std::vector<int> presentation_ranks;
  std::vector<std::vector<mpz_class>> torsion;
  bool match = false;  // ranks equal coefficients degree by degree

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Runs the oracle-vs-presentation comparison plus the brute-force
/// cross-checks, scaled to the input: the exhaustive searches only run on
/// marking sets small enough to finish (#S <= 5, partition check #S <= 6).
SelfTestReport run_selftest(const SimplicialComplex& k, int threads = 1);

}  // namespace m0k
