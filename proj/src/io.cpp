#include "m0k/io.hpp"

#include <fstream>

#include "m0k/errors.hpp"
#include "m0k/rational.hpp"

namespace m0k {

namespace {

std::vector<std::string> parse_label_array(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw ValidationError(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Mask parse_mask(const GroundSet& g, const json& j, const char* what) {
  Mask m = 0;
  for (const auto& label : parse_label_array(j, what)) {
    Mask b = bit(g.index(label));
    if (m & b) throw ValidationError(std::string(what) + " repeats label '" + label + "'");
    m |= b;
  }
  return m;
}

json mask_to_json(const GroundSet& g, Mask m) {
  json out = json::array();
  for (const auto& label : g.labels_of(m)) out.push_back(label);
  return out;
}

}  // namespace

SimplicialComplex parse_complex(const json& j) {
  if (!j.is_object()) throw ValidationError("complex must be a JSON object");
  if (!j.contains("labels")) throw ValidationError("complex is missing \"labels\"");
  GroundSet ground(parse_label_array(j.at("labels"), "labels"));

  bool has_facets = j.contains("facets");
  bool has_weights = j.contains("weights");
  if (has_facets == has_weights)
    throw ValidationError("complex needs exactly one of \"facets\" or \"weights\"");

  if (has_facets) {
    const auto& fj = j.at("facets");
    if (!fj.is_array()) throw ValidationError("facets must be an array");
    std::vector<Mask> facets;
    for (const auto& f : fj) facets.push_back(parse_mask(ground, f, "facet"));
    return SimplicialComplex::from_facets(std::move(ground), std::move(facets));
  }

  const auto& wj = j.at("weights");
  if (!wj.is_array()) throw ValidationError("weights must be an array");
  std::vector<mpq_class> weights;
  for (const auto& w : wj) {
    if (!w.is_string())
      throw ValidationError("weights must be exact rational strings like \"1/4\"");
    weights.push_back(parse_rational(w.get<std::string>()));
  }
  return SimplicialComplex::from_hassett(HassettWeights(std::move(ground), std::move(weights)));
}

SimplicialComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_complex(j);
}

json complex_to_json(const SimplicialComplex& k) {
  json j;
  j["labels"] = k.ground().labels();
  json facets = json::array();
  for (Mask f : k.facets()) facets.push_back(mask_to_json(k.ground(), f));
  j["facets"] = facets;
  return j;
}

json graph_to_json(const GroundSet& g, const KStableGraph& graph) {
  json j;
  json blocks = json::array();
  for (Mask b : graph.blocks) blocks.push_back(mask_to_json(g, b));
  j["blocks"] = blocks;
  json splits = json::array();
  for (Mask s : graph.splits) {
    json split = json::array();
    split.push_back(mask_to_json(g, g.complement(s)));  // side with the first label
    split.push_back(mask_to_json(g, s));
    splits.push_back(split);
  }
  j["splits"] = splits;
  return j;
}

KStableGraph parse_graph(const GroundSet& g, const json& j) {
  if (!j.is_object()) throw ValidationError("graph must be a JSON object");
  if (!j.contains("blocks")) throw ValidationError("graph is missing \"blocks\"");
  std::vector<Mask> blocks;
  for (const auto& b : j.at("blocks")) blocks.push_back(parse_mask(g, b, "block"));
  std::vector<Mask> splits;
  if (j.contains("splits")) {
    for (const auto& s : j.at("splits")) {
      if (!s.is_array() || s.size() != 2)
        throw ValidationError("each split must list its two sides");
      Mask a = parse_mask(g, s.at(0), "split side");
      Mask b = parse_mask(g, s.at(1), "split side");
      if ((a | b) != g.full_mask() || (a & b) != 0)
        throw ValidationError("split sides must partition the marking set");
      splits.push_back((a & 1) ? b : a);
    }
  }
  return make_graph(g, std::move(blocks), std::move(splits));
}

json element_to_json(const RingElement& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms()) {
    json mono = json::array();
    for (std::size_t i = 0; i < m.factors.size();) {
      std::size_t j = i;
      while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
      mono.push_back(json::array({m.factors[i], static_cast<int>(j - i)}));
      i = j;
    }
    out.push_back(json{{"monomial", mono}, {"coeff", c.get_str()}});
  }
  return out;
}

RingElement parse_element(const GeneratorTable& table, const json& j) {
  if (!j.is_array()) throw ValidationError("ring element must be a JSON array of terms");
  RingElement out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff"))
      throw ValidationError("each term needs \"monomial\" and \"coeff\"");
    const auto& cj = term.at("coeff");
    if (!cj.is_string())
      throw ValidationError("coefficients must be integer strings");
    mpz_class coeff;
    try {
      coeff = mpz_class(cj.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad integer coefficient '" + cj.get<std::string>() + "'");
    }
    Monomial mono;
    for (const auto& f : term.at("monomial")) {
      if (!f.is_array() || f.size() != 2 || !f.at(0).is_number_integer() ||
          !f.at(1).is_number_integer())
        throw ValidationError("monomial factors are [generator-id, exponent] pairs");
      int id = f.at(0).get<int>();
      int exp = f.at(1).get<int>();
      if (id < 0 || id >= table.size())
        throw ValidationError("generator id " + std::to_string(id) + " out of range");
      if (exp <= 0) throw ValidationError("exponents must be positive");
      for (int e = 0; e < exp; ++e) mono = mono.times_generator(id);
    }
    out.add(mono, coeff);
  }
  return out;
}

}  // namespace m0k
