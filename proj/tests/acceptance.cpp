// Acceptance suite: drives every bundled corpus complex through the
// self-test machinery and prints one line per criterion.  Exits nonzero if
// any criterion fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "m0k/cli.hpp"
#include "m0k/io.hpp"
#include "m0k/selftest.hpp"

using namespace m0k;

namespace {

struct CorpusEntry {
  std::string name;
  bool discrete = false;
  SimplicialComplex complex = SimplicialComplex::discrete(
      GroundSet({"1", "2", "3"}));  // replaced on load
  SelfTestReport report;
  double seconds = 0;  // profile + oracle time
};

const std::vector<std::pair<std::string, bool>> kCorpus = {
    {"discrete4", true},    {"discrete5", true},    {"discrete6", true},
    {"discrete7", true},    {"k4pair", false},      {"lm5", false},
    {"lm6", false},         {"lm7", false},         {"heavylight6", false},
    {"pairs5", false},      {"pairs6", false},      {"onepair7", false},
    {"mixed7", false},      {"nonhassett5", false}, {"nonhassett6", false},
    {"nonhassett7", false},
};

bool check_ok(const SelfTestReport& r, const std::string& name, bool* found = nullptr) {
  for (const auto& c : r.checks)
    if (c.name == name) {
      if (found) *found = true;
      return c.ok;
    }
  if (found) *found = false;
  return false;
}

std::string ranks_str(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

int main() {
  const std::string corpus_dir = M0K_CORPUS_DIR;
  const int threads = 2;
  std::vector<CorpusEntry> corpus;
  int failures = 0;

  for (const auto& [name, discrete] : kCorpus) {
    CorpusEntry e;
    e.name = name;
    e.discrete = discrete;
    e.complex = load_complex_file(corpus_dir + "/" + name + ".json");
    if (discrete) {
      // Criterion 1 carries runtime caps for exactly this computation.
      auto t0 = std::chrono::steady_clock::now();
      Presentation p(e.complex);
      p.poincare_profile(threads);
      interpolate_profile(e.complex, threads);
      e.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    e.report = run_selftest(e.complex, threads);
    corpus.push_back(std::move(e));
  }

  auto criterion = [&](int num, bool ok, const std::string& what,
                       const std::string& detail = "") {
    std::cout << "CRITERION " << num << " [" << (ok ? "PASS" : "FAIL") << "] " << what
              << (detail.empty() ? "" : " -- " + detail) << "\n";
    if (!ok) ++failures;
  };

  // 1. Keel recovery on discrete rulebooks: presentation ranks equal the
  //    point-count coefficients, no torsion, within the stated runtimes.
  {
    bool ok = true;
    std::string detail;
    std::map<std::string, std::vector<int>> expected = {
        {"discrete4", {1, 1}},
        {"discrete5", {1, 5, 1}},
        {"discrete6", {1, 16, 16, 1}},
    };
    for (const auto& e : corpus) {
      if (!e.discrete) continue;
      bool torsion_free = true;
      for (const auto& t : e.report.torsion) torsion_free = torsion_free && t.empty();
      double cap = e.complex.ground().size() <= 6 ? 1.0 : 600.0;
      bool here = e.report.match && torsion_free && e.seconds <= cap;
      if (auto it = expected.find(e.name); it != expected.end())
        here = here && e.report.presentation_ranks == it->second;
      if (!here && detail.empty()) detail = e.name;
      ok = ok && here;
      std::cout << "  " << e.name << ": ranks " << ranks_str(e.report.presentation_ranks)
                << " in " << e.seconds << "s\n";
    }
    criterion(1, ok, "Keel recovery on discrete rulebooks", detail);
  }

  // 2. Collision spaces: ranks equal coefficients exactly on the
  //    non-discrete corpus (Hassett and hand-built complexes).
  {
    bool ok = true;
    int count = 0;
    std::string detail;
    for (const auto& e : corpus) {
      if (e.discrete) continue;
      ++count;
      if (!e.report.match) {
        ok = false;
        detail = e.name;
      }
      std::cout << "  " << e.name << ": ranks " << ranks_str(e.report.presentation_ranks)
                << "\n";
    }
    ok = ok && count >= 10;
    criterion(2, ok, "collision-space ranks match the oracle (" +
                         std::to_string(count) + " complexes)", detail);
  }

  // 3. Intersection calculus on every distinct divisor pair.
  {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus)
      if (!check_ok(e.report, "intersection-calculus")) {
        ok = false;
        detail = e.name;
      }
    criterion(3, ok, "products of divisors are stratum classes of meets", detail);
  }

  // 4. WDVV dual-path and pushforward identities.
  {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
      if (!check_ok(e.report, "wdvv-dual-path") ||
          !check_ok(e.report, "wdvv-pushforward-identity")) {
        ok = false;
        detail = e.name;
      }
    }
    criterion(4, ok, "wdvv elements agree along both routes and with pushforwards",
              detail);
  }

  // 5. Brute-force equivalences on every corpus complex with <= 5 labels.
  {
    bool ok = true;
    int covered = 0;
    std::string detail;
    for (const auto& e : corpus) {
      if (e.complex.ground().size() > 5) continue;
      ++covered;
      for (const char* name :
           {"triparted-vs-partition-enumeration", "enumeration-vs-brute-force",
            "leq-vs-vertex-replacement", "meet-is-unique-maximal-lower-bound",
            "disjoint-vs-lower-bound-search"}) {
        bool found = false;
        bool good = check_ok(e.report, name, &found);
        if (!found || !good) {
          ok = false;
          detail = e.name + std::string(": ") + name;
        }
      }
    }
    ok = ok && covered >= 4;
    criterion(5, ok, "exhaustive cross-checks at 5 or fewer labels (" +
                         std::to_string(covered) + " complexes)", detail);
  }

  // 6. Structural properties everywhere, plus byte-deterministic CLI
  //    output across thread counts.
  {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
      for (const char* name : {"graph-encoding-soundness", "ranks-palindromic",
                               "rank-one-at-ends", "equivariance-graphs",
                               "equivariance-relations"}) {
        bool found = false;
        bool good = check_ok(e.report, name, &found);
        if (!found || !good) {
          ok = false;
          detail = e.name + std::string(": ") + name;
        }
      }
      if (!e.report.all_ok()) {
        ok = false;
        if (detail.empty()) detail = e.name + std::string(": self-test");
      }
    }
    for (const auto& [name, discrete] : kCorpus) {
      JobConfig cfg;
      cfg.command = "betti";
      cfg.input_path = corpus_dir + "/" + name + ".json";
      cfg.threads = 1;
      auto first = run(cfg);
      cfg.threads = 4;
      auto threaded = run(cfg);
      cfg.threads = 1;
      auto again = run(cfg);
      if (first.exit_code != 0 || first.output != threaded.output ||
          first.output != again.output) {
        ok = false;
        detail = name + std::string(": cli determinism");
      }
    }
    criterion(6, ok, "structural properties and deterministic output", detail);
  }

  // Regression surface: committed self-test reports for every input.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, discrete] : kCorpus) {
      JobConfig cfg;
      cfg.command = "selftest";
      cfg.input_path = corpus_dir + "/" + name + ".json";
      cfg.format = "json";
      cfg.threads = 1;
      auto res = run(cfg);
      std::ifstream expect_file(corpus_dir + "/expected/" + name + ".report.json");
      if (!expect_file) {
        ok = false;
        detail = name + std::string(": missing expected report");
        continue;
      }
      std::stringstream buf;
      buf << expect_file.rdbuf();
      if (res.exit_code != 0 || buf.str() != res.output) {
        ok = false;
        detail = name + std::string(": report drifted");
      }
    }
    std::cout << "REGRESSION [" << (ok ? "PASS" : "FAIL")
              << "] committed corpus reports" << (detail.empty() ? "" : " -- " + detail)
              << "\n";
    if (!ok) ++failures;
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
