#include "m0k/cli.hpp"

#include <sstream>

#include "m0k/errors.hpp"
#include "m0k/io.hpp"
#include "m0k/selftest.hpp"

namespace m0k {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json json_int(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json torsion_to_json(const std::vector<std::vector<mpz_class>>& torsion) {
  json out = json::array();
  for (const auto& degree : torsion) {
    json row = json::array();
    for (const auto& d : degree) row.push_back(json_int(d));
    out.push_back(row);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_mpz(const std::vector<mpz_class>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_split(const GroundSet& g, Mask side) {
  return g.format_mask(g.complement(side)) + "|" + g.format_mask(side);
}

std::string graph_line(const GroundSet& g, const KStableGraph& graph) {
  std::string out = "blocks";
  for (Mask b : graph.blocks) out += " " + g.format_mask(b);
  if (!graph.splits.empty()) {
    out += " splits";
    for (Mask s : graph.splits) out += " " + format_split(g, s);
  }
  return out;
}

RingElement parse_element_arg(const Presentation& p, const std::string& arg) {
  if (arg.empty()) throw UsageError("empty ring element argument");
  if (arg == "0") return RingElement::zero();
  if (arg == "1") return RingElement::unit();
  if (arg[0] == '[') {
    json j;
    try {
      j = json::parse(arg);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("bad ring element JSON: ") + e.what());
    }
    return parse_element(p.generators(), j);
  }
  if (auto id = p.generators().find_name(arg)) return RingElement::generator(*id);
  throw UsageError("cannot parse ring element '" + arg +
                   "': expected a JSON array, a generator name, \"0\" or \"1\"");
}

RunResult cmd_validate(const SimplicialComplex& k, const JobConfig& cfg) {
  bool triparted = k.at_least_triparted();
  RunResult res;
  if (cfg.format == "json") {
    json j = complex_to_json(k);
    j["at_least_triparted"] = triparted;
    res.output = dump(j);
  } else if (cfg.format == "text") {
    std::string facets;
    for (Mask f : k.facets()) facets += " " + k.ground().format_mask(f);
    res.output = "labels: " + std::to_string(k.ground().size()) + "\nfacets:" + facets +
                 "\nat-least-triparted: " + (triparted ? "yes" : "no") + "\n";
  } else {
    throw UsageError("csv output is not defined for validate");
  }
  if (!triparted) {
    res.exit_code = 2;
    res.error = "not at least triparted\n";
  }
  return res;
}

RunResult cmd_divisors(const Presentation& p, const JobConfig& cfg) {
  const auto& table = p.generators();
  RunResult res;
  if (cfg.format == "json") {
    json list = json::array();
    for (int i = 0; i < table.size(); ++i) {
      const auto& d = table.divisor(i);
      list.push_back(json{{"id", i},
                          {"name", table.name(i)},
                          {"kind", d.kind == BoundaryDivisor::Kind::pi ? "pi" : "sigma"},
                          {"graph", graph_to_json(p.ground(), d.graph)}});
    }
    res.output = dump(json{{"count", table.size()}, {"divisors", list}});
  } else if (cfg.format == "csv") {
    std::string out = "id,kind,name\n";
    for (int i = 0; i < table.size(); ++i)
      out += std::to_string(i) + "," +
             (table.divisor(i).kind == BoundaryDivisor::Kind::pi ? "pi" : "sigma") +
             "," + table.name(i) + "\n";
    res.output = out;
  } else {
    std::string out;
    for (int i = 0; i < table.size(); ++i)
      out += std::to_string(i) + " " + table.name(i) + "\n";
    res.output = out;
  }
  return res;
}

RunResult cmd_strata(const SimplicialComplex& k, const JobConfig& cfg) {
  if (cfg.all_codims == cfg.codim.has_value())
    throw UsageError("strata needs exactly one of --codim or --all");
  const GroundSet& g = k.ground();
  auto graphs = enumerate_graphs(k, cfg.codim);

  std::vector<std::pair<int, int>> edges;  // (child id, parent id), covers only
  if (cfg.all_codims) {
    for (std::size_t a = 0; a < graphs.size(); ++a)
      for (std::size_t b = 0; b < graphs.size(); ++b) {
        if (graphs[a].codimension(g) != graphs[b].codimension(g) + 1) continue;
        if (leq(graphs[a], graphs[b])) edges.emplace_back(a, b);
      }
  }

  RunResult res;
  if (cfg.format == "json") {
    json list = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      json gj = graph_to_json(g, graphs[i]);
      gj["id"] = i;
      gj["codim"] = graphs[i].codimension(g);
      list.push_back(gj);
    }
    json j{{"count", graphs.size()}, {"graphs", list}};
    if (cfg.all_codims) {
      json ej = json::array();
      for (auto [a, b] : edges) ej.push_back(json::array({a, b}));
      j["hasse_edges"] = ej;
    }
    res.output = dump(j);
  } else if (cfg.format == "text") {
    std::string out = "count " + std::to_string(graphs.size()) + "\n";
    for (std::size_t i = 0; i < graphs.size(); ++i)
      out += std::to_string(i) + " codim " +
             std::to_string(graphs[i].codimension(g)) + " " + graph_line(g, graphs[i]) +
             "\n";
    if (cfg.all_codims) {
      out += "covers (child parent):\n";
      for (auto [a, b] : edges)
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    res.output = out;
  } else {
    throw UsageError("csv output is not defined for strata");
  }
  return res;
}

RunResult cmd_ring(const Presentation& p, const JobConfig& cfg) {
  const auto& rel = p.relation_set();
  RunResult res;
  if (cfg.format == "json") {
    json quad = json::array();
    for (auto [i, j] : rel.quadratic) quad.push_back(json::array({i, j}));
    json lin = json::array();
    for (const auto& w : rel.linear) lin.push_back(element_to_json(w));
    res.output = dump(json{{"generators", p.generators().size()},
                           {"quadratic", quad},
                           {"linear", lin}});
  } else if (cfg.format == "text") {
    std::string out = "generators " + std::to_string(p.generators().size()) + "\n";
    out += "quadratic relations (" + std::to_string(rel.quadratic.size()) + "):\n";
    for (auto [i, j] : rel.quadratic)
      out += "  " + p.generators().name(i) + "*" + p.generators().name(j) + " = 0\n";
    out += "wdvv elements (" + std::to_string(rel.linear.size()) + "):\n";
    for (const auto& w : rel.linear)
      out += "  " + format_element(w, p.generators()) + " = 0\n";
    res.output = out;
  } else {
    throw UsageError("csv output is not defined for ring");
  }
  return res;
}

RunResult cmd_betti(const Presentation& p, const JobConfig& cfg) {
  auto profile = p.poincare_profile(cfg.threads);
  RunResult res;
  std::vector<std::vector<mpz_class>> torsion;
  for (const auto& grp : profile.groups) torsion.push_back(grp.torsion);
  if (cfg.format == "json") {
    res.output =
        dump(json{{"ranks", profile.ranks()}, {"torsion", torsion_to_json(torsion)}});
  } else if (cfg.format == "csv") {
    std::string out = "degree,rank,torsion\n";
    for (std::size_t d = 0; d < profile.groups.size(); ++d)
      out += std::to_string(d) + "," + std::to_string(profile.groups[d].rank) + "," +
             join_mpz(profile.groups[d].torsion, ";") + "\n";
    res.output = out;
  } else {
    res.output = join_ints(profile.ranks()) + "\n";
    for (std::size_t d = 0; d < profile.groups.size(); ++d)
      if (!profile.groups[d].torsion.empty())
        res.output += "torsion d=" + std::to_string(d) + ": " +
                      join_mpz(profile.groups[d].torsion, ";") + "\n";
  }
  return res;
}

RunResult element_result(const Presentation& p, const RingElement& x,
                         const JobConfig& cfg) {
  RunResult res;
  if (cfg.format == "json")
    res.output = dump(element_to_json(x));
  else if (cfg.format == "text")
    res.output = format_element(x, p.generators()) + "\n";
  else
    throw UsageError("csv output is not defined for ring elements");
  return res;
}

RunResult cmd_multiply(const Presentation& p, const JobConfig& cfg) {
  if (cfg.args.size() != 2) throw UsageError("multiply takes two ring elements");
  return element_result(
      p, p.multiply(parse_element_arg(p, cfg.args[0]), parse_element_arg(p, cfg.args[1])),
      cfg);
}

RunResult cmd_stratum_class(const Presentation& p, const JobConfig& cfg) {
  if (cfg.args.size() != 1) throw UsageError("stratum-class takes one graph (JSON)");
  json j;
  try {
    j = json::parse(cfg.args[0]);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad graph JSON: ") + e.what());
  }
  auto graph = parse_graph(p.ground(), j);
  return element_result(p, p.stratum_class(graph), cfg);
}

RunResult cmd_wdvv(const Presentation& p, const JobConfig& cfg) {
  if (cfg.args.size() != 4) throw UsageError("wdvv takes four distinct labels");
  const GroundSet& g = p.ground();
  return element_result(p,
                        p.wdvv(g.index(cfg.args[0]), g.index(cfg.args[1]),
                               g.index(cfg.args[2]), g.index(cfg.args[3])),
                        cfg);
}

RunResult cmd_pushforward(const Presentation& p, const JobConfig& cfg) {
  if (cfg.args.size() != 1)
    throw UsageError("pushforward takes one comma-separated label set");
  const GroundSet& g = p.ground();
  Mask m = 0;
  std::stringstream ss(cfg.args[0]);
  std::string label;
  while (std::getline(ss, label, ',')) m |= bit(g.index(label));
  return element_result(p, p.pushforward_divisor(m), cfg);
}

RunResult cmd_pointcount(const SimplicialComplex& k, const JobConfig& cfg) {
  RunResult res;
  if (cfg.q) {
    long count = count_points(k, *cfg.q);
    if (cfg.format == "json")
      res.output = dump(json{{"q", *cfg.q}, {"count", count}});
    else if (cfg.format == "csv")
      res.output = "q,count\n" + std::to_string(*cfg.q) + "," + std::to_string(count) +
                   "\n";
    else
      res.output = std::to_string(count) + "\n";
    return res;
  }
  auto poly = interpolate_profile(k, cfg.threads);
  if (cfg.format == "json") {
    json c = json::array();
    for (const auto& v : poly.coeffs) c.push_back(json_int(v));
    res.output = dump(json{{"point_count_coeffs", c}});
  } else if (cfg.format == "csv") {
    std::string out = "degree,coefficient\n";
    for (std::size_t d = 0; d < poly.coeffs.size(); ++d)
      out += std::to_string(d) + "," + poly.coeffs[d].get_str() + "\n";
    res.output = out;
  } else {
    res.output = join_mpz(poly.coeffs) + "\n";
  }
  return res;
}

RunResult cmd_selftest(const SimplicialComplex& k, const JobConfig& cfg) {
  auto report = run_selftest(k, cfg.threads);
  RunResult res;
  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json coeffs = json::array();
    for (const auto& v : report.point_count_coeffs) coeffs.push_back(json_int(v));
    res.output = dump(json{{"point_count_coeffs", coeffs},
                           {"presentation_ranks", report.presentation_ranks},
                           {"torsion", torsion_to_json(report.torsion)},
                           {"match", report.match},
                           {"checks", checks}});
  } else if (cfg.format == "csv") {
    std::string out = "degree,rank,point_count_coeff,torsion\n";
    for (std::size_t d = 0; d < report.presentation_ranks.size(); ++d)
      out += std::to_string(d) + "," + std::to_string(report.presentation_ranks[d]) +
             "," + report.point_count_coeffs[d].get_str() + "," +
             join_mpz(report.torsion[d], ";") + "\n";
    res.output = out;
  } else {
    std::string out;
    for (const auto& c : report.checks)
      out += (c.ok ? "ok   " : "FAIL ") + c.name +
             (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    out += "presentation ranks: " + join_ints(report.presentation_ranks) + "\n";
    out += "point-count coeffs: " + join_mpz(report.point_count_coeffs) + "\n";
    out += std::string("match: ") + (report.match ? "yes" : "no") + "\n";
    res.output = out;
  }
  if (!report.all_ok()) {
    res.exit_code = 4;
    res.error = "self-test found inconsistencies\n";
  }
  return res;
}

}  // namespace

RunResult run(const JobConfig& cfg) {
  try {
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
      throw UsageError("format must be text, json, or csv");
    if (cfg.threads < 1) throw UsageError("threads must be positive");
    if (cfg.command.empty()) throw UsageError("no command given");
    if (cfg.input_path.empty()) throw UsageError("--input is required");

    SimplicialComplex k = load_complex_file(cfg.input_path);
    if (k.ground().size() > cfg.max_labels)
      throw SizeGuardError("input has " + std::to_string(k.ground().size()) +
                           " labels, guard is " + std::to_string(cfg.max_labels) +
                           " (raise with --max-labels)");

    if (cfg.command == "validate") return cmd_validate(k, cfg);
    if (cfg.command == "strata") return cmd_strata(k, cfg);
    if (cfg.command == "pointcount") return cmd_pointcount(k, cfg);
    if (cfg.command == "selftest") return cmd_selftest(k, cfg);

    Presentation p(std::move(k));
    if (cfg.command == "divisors") return cmd_divisors(p, cfg);
    if (cfg.command == "ring") return cmd_ring(p, cfg);
    if (cfg.command == "betti") return cmd_betti(p, cfg);
    if (cfg.command == "multiply") return cmd_multiply(p, cfg);
    if (cfg.command == "stratum-class") return cmd_stratum_class(p, cfg);
    if (cfg.command == "wdvv") return cmd_wdvv(p, cfg);
    if (cfg.command == "pushforward") return cmd_pushforward(p, cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    return {1, "", std::string(e.what()) + "\n"};
  } catch (const ValidationError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const SizeGuardError& e) {
    return {3, "", std::string(e.what()) + "\n"};
  } catch (const InternalError& e) {
    return {4, "", std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {4, "", std::string("unexpected error: ") + e.what() + "\n"};
  }
}

}  // namespace m0k
