#include "m0k/graph.hpp"

#include <algorithm>

#include "m0k/errors.hpp"

namespace m0k {

namespace {

bool compatible(Mask a, Mask b) {
  // Both masks exclude the first label, so "nested or disjoint" is the
  // whole compatibility condition.
  return (a & ~b) == 0 || (b & ~a) == 0 || (a & b) == 0;
}

struct TreeIndex {
  // node 0 is the root (the side of every split containing the first
  // label); node 1+i is the lower endpoint of split i.
  std::vector<int> split_parent;   // per split: node id of upper endpoint
  std::vector<int> block_node;     // per block: node id
  std::vector<int> legs, edges;    // per node
};

// Assumes splits pairwise compatible, deduplicated, oriented away from the
// first label.
TreeIndex build_tree(const std::vector<Mask>& blocks, const std::vector<Mask>& splits) {
  int e = static_cast<int>(splits.size());
  int b = static_cast<int>(blocks.size());
  TreeIndex t;
  t.split_parent.assign(e, 0);
  t.block_node.assign(b, 0);
  t.legs.assign(e + 1, 0);
  t.edges.assign(e + 1, 0);
  for (int i = 0; i < e; ++i) {
    int best = -1;
    for (int j = 0; j < e; ++j) {
      if (j == i || (splits[i] & ~splits[j]) != 0) continue;
      if (best < 0 || popcount(splits[j]) < popcount(splits[best])) best = j;
    }
    t.split_parent[i] = best < 0 ? 0 : 1 + best;
    t.edges[1 + i] += 1;                // the split is an edge at its own node
    t.edges[t.split_parent[i]] += 1;    // and at its parent
  }
  for (int i = 0; i < b; ++i) {
    int best = -1;
    for (int j = 0; j < e; ++j) {
      if ((blocks[i] & ~splits[j]) != 0) continue;
      if (best < 0 || popcount(splits[j]) < popcount(splits[best])) best = j;
    }
    t.block_node[i] = best < 0 ? 0 : 1 + best;
    t.legs[t.block_node[i]] += 1;
  }
  return t;
}

bool stable(const std::vector<Mask>& blocks, const std::vector<Mask>& splits) {
  TreeIndex t = build_tree(blocks, splits);
  for (std::size_t v = 0; v < t.legs.size(); ++v)
    if (t.legs[v] + t.edges[v] < 3) return false;
  return true;
}

}  // namespace

KStableGraph make_graph(const GroundSet& g, std::vector<Mask> blocks,
                        std::vector<Mask> splits) {
  Mask full = g.full_mask();
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw ValidationError("empty block");
    if (b & ~full) throw ValidationError("block contains labels outside the ground set");
    if (b & seen) throw ValidationError("blocks are not disjoint");
    seen |= b;
  }
  if (seen != full) throw ValidationError("blocks do not cover the marking set");
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });

  for (Mask& s : splits) {
    if (s & ~full) throw ValidationError("split contains labels outside the ground set");
    if (s & 1) s = full & ~s;  // orient away from the first label
    if (s == 0 || s == full) throw ValidationError("split side must be a proper nonempty subset");
    for (Mask b : blocks) {
      Mask inter = b & s;
      if (inter != 0 && inter != b)
        throw ValidationError("split side is not a union of blocks");
    }
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  return KStableGraph{std::move(blocks), std::move(splits)};
}

std::vector<VertexView> vertices(const KStableGraph& graph) {
  TreeIndex t = build_tree(graph.blocks, graph.splits);
  int e = static_cast<int>(graph.splits.size());
  std::vector<VertexView> out(e + 1);
  for (int v = 0; v <= e; ++v) out[v].id = v;
  for (int i = 0; i < static_cast<int>(graph.blocks.size()); ++i) {
    out[t.block_node[i]].block_ids.push_back(i);
    out[t.block_node[i]].markings |= graph.blocks[i];
  }
  for (int i = 0; i < e; ++i) {
    out[1 + i].split_ids.push_back(i);
    out[t.split_parent[i]].split_ids.push_back(i);
  }
  for (auto& v : out) std::sort(v.split_ids.begin(), v.split_ids.end());
  return out;
}

Mask vertex_side_of_split(const KStableGraph& graph, const std::vector<VertexView>&,
                          int vertex_id, int split_id) {
  Mask full = 0;
  for (Mask b : graph.blocks) full |= b;
  Mask side = graph.splits[split_id];
  if (vertex_id == 0) return full & ~side;
  Mask node_set = graph.splits[vertex_id - 1];
  return (node_set & ~side) == 0 ? side : (full & ~side);
}

ValidationReport validate(const SimplicialComplex& k, const std::vector<Mask>& blocks,
                          const std::vector<Mask>& splits) {
  const GroundSet& g = k.ground();
  ValidationReport report;
  KStableGraph graph;
  try {
    graph = make_graph(g, blocks, splits);
  } catch (const ValidationError& err) {
    report.structural.push_back(err.what());
    return report;
  }

  auto fail = [&](int cond, std::string msg) {
    if (std::find(report.failed_conditions.begin(), report.failed_conditions.end(),
                  cond) == report.failed_conditions.end())
      report.failed_conditions.push_back(cond);
    report.messages.push_back(std::move(msg));
  };

  bool tree = true;
  for (std::size_t i = 0; i < graph.splits.size() && tree; ++i)
    for (std::size_t j = i + 1; j < graph.splits.size() && tree; ++j)
      if (!compatible(graph.splits[i], graph.splits[j])) {
        tree = false;
        fail(1, "splits " + g.format_mask(graph.splits[i]) + " and " +
                    g.format_mask(graph.splits[j]) +
                    " are incompatible: no single tree carries both edges");
      }

  for (Mask b : graph.blocks)
    if (!k.contains(b)) fail(2, "block " + g.format_mask(b) + " is not a face");

  if (tree) {
    auto verts = vertices(graph);
    for (const auto& v : verts) {
      if (v.edge_degree() <= 1 && k.contains(v.markings))
        fail(3, "leaf marking set " + g.format_mask(v.markings) + " is a face");
      if (v.n_half_edges() < 3)
        fail(4, "vertex with " + std::to_string(v.n_half_edges()) + " half-edges");
    }
  } else {
    // No tree to walk; the leaf condition still has a split-side form.
    for (Mask s : graph.splits) {
      if (k.contains(s)) fail(3, "split side " + g.format_mask(s) + " is a face");
      if (k.contains(g.complement(s)))
        fail(3, "split side " + g.format_mask(g.complement(s)) + " is a face");
    }
    report.messages.push_back("stability not evaluated: splits do not form a tree");
  }
  return report;
}

std::vector<KStableGraph> enumerate_graphs(const SimplicialComplex& k,
                                           std::optional<int> codim) {
  if (!k.at_least_triparted())
    throw ValidationError("complex is not at least triparted");
  const GroundSet& g = k.ground();
  const int n = g.size();
  const Mask full = g.full_mask();
  auto faces = k.faces();

  std::vector<KStableGraph> out;

  std::vector<Mask> blocks;
  auto process_partition = [&](const std::vector<Mask>& part) {
    int b = static_cast<int>(part.size());
    if (b < 3) return;  // every graph needs >= 3 legs in total
    int min_e = 0, max_e = b - 3;
    if (codim) {
      int target = *codim - (n - b);
      if (target < 0 || target > max_e) return;
      min_e = max_e = target;
    }

    // Candidate edges: unions of >= 2 blocks on each side, avoiding the
    // block with the first label, with both sides non-faces.
    std::vector<Mask> cands;
    int free_blocks = b - 1;
    for (Mask sub = 1; sub < (Mask{1} << free_blocks); ++sub) {
      int nb = popcount(sub);
      if (nb < 2 || nb > b - 2) continue;
      Mask side = 0;
      for (int i = 0; i < free_blocks; ++i)
        if (sub & bit(i)) side |= part[1 + i];
      if (k.contains(side) || k.contains(full & ~side)) continue;
      cands.push_back(side);
    }
    std::sort(cands.begin(), cands.end());

    std::vector<Mask> chosen;
    auto dfs = [&](auto&& self, std::size_t idx) -> void {
      int e = static_cast<int>(chosen.size());
      if (e >= min_e && e <= max_e && stable(part, chosen))
        out.push_back(KStableGraph{part, chosen});
      if (e == max_e) return;
      for (std::size_t i = idx; i < cands.size(); ++i) {
        bool ok = true;
        for (Mask c : chosen)
          if (!compatible(cands[i], c)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(cands[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    dfs(dfs, 0);
  };

  auto rec = [&](auto&& self, Mask remaining) -> void {
    if (remaining == 0) {
      process_partition(blocks);
      return;
    }
    int low = lowest_bit(remaining);
    for (Mask f : faces) {
      if (f == 0 || !(f & bit(low)) || (f & ~remaining)) continue;
      blocks.push_back(f);
      self(self, remaining & ~f);
      blocks.pop_back();
    }
  };
  rec(rec, full);

  std::sort(out.begin(), out.end(), [&](const KStableGraph& a, const KStableGraph& b) {
    int ca = a.codimension(g), cb = b.codimension(g);
    if (ca != cb) return ca < cb;
    if (a.blocks != b.blocks) return a.blocks < b.blocks;
    return a.splits < b.splits;
  });
  return out;
}

bool leq(const KStableGraph& g1, const KStableGraph& g2) {
  for (Mask b : g2.blocks) {
    bool inside = false;
    for (Mask c : g1.blocks)
      if ((b & ~c) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return std::includes(g1.splits.begin(), g1.splits.end(), g2.splits.begin(),
                       g2.splits.end());
}

bool separates(const GroundSet& g, const KStableGraph& graph, int i, int j, int k,
               int l) {
  int ids[4] = {i, j, k, l};
  for (int a = 0; a < 4; ++a) {
    if (ids[a] < 0 || ids[a] >= g.size())
      throw ValidationError("label index out of range");
    for (int b = a + 1; b < 4; ++b)
      if (ids[a] == ids[b]) throw ValidationError("labels must be distinct");
  }
  auto same_block = [&](int x, int y) {
    for (Mask b : graph.blocks)
      if (b & bit(x)) return (b & bit(y)) != 0;
    return false;
  };
  if (same_block(i, j) || same_block(k, l)) return true;
  Mask ij = bit(i) | bit(j), kl = bit(k) | bit(l);
  for (Mask s : graph.splits) {
    if ((ij & ~s) == 0 && (kl & s) == 0) return true;
    if ((kl & ~s) == 0 && (ij & s) == 0) return true;
  }
  return false;
}

std::vector<KStableGraph> generic_meet(const SimplicialComplex& k,
                                       const KStableGraph& g1, const KStableGraph& g2) {
  const GroundSet& g = k.ground();
  // Join partition: connected components of "shares a block in g1 or g2".
  std::vector<int> parent(g.size());
  for (int i = 0; i < g.size(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite_block = [&](Mask b) {
    int root = find(lowest_bit(b));
    for (int i : g.indices_of(b)) parent[find(i)] = root;
  };
  for (Mask b : g1.blocks) unite_block(b);
  for (Mask b : g2.blocks) unite_block(b);
  std::vector<Mask> comp(g.size(), 0);
  for (int i = 0; i < g.size(); ++i) comp[find(i)] |= bit(i);
  std::vector<Mask> blocks;
  for (int i = 0; i < g.size(); ++i)
    if (comp[i]) blocks.push_back(comp[i]);

  std::vector<Mask> splits = g1.splits;
  splits.insert(splits.end(), g2.splits.begin(), g2.splits.end());
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  auto report = validate(k, blocks, splits);
  if (!report.valid()) return {};
  return {make_graph(g, std::move(blocks), std::move(splits))};
}

std::string BoundaryDivisor::name(const GroundSet& g) const {
  if (kind == Kind::pi) return "Pi" + g.format_mask(pi_side);
  return "Sigma{" + g.label(s) + "," + g.label(t) + "}";
}

std::vector<BoundaryDivisor> divisors(const SimplicialComplex& k) {
  if (!k.at_least_triparted())
    throw ValidationError("complex is not at least triparted");
  const GroundSet& g = k.ground();
  const int n = g.size();
  const Mask full = g.full_mask();

  std::vector<BoundaryDivisor> out;
  std::vector<Mask> pis;
  for (Mask i = 0; i <= full; ++i) {
    if (!(i & 1)) continue;  // canonical side holds the first label
    int size = popcount(i);
    if (size < 2 || size > n - 2) continue;
    if (k.contains(i) || k.contains(full & ~i)) continue;
    pis.push_back(i);
  }
  std::sort(pis.begin(), pis.end(), mask_lex_less);
  for (Mask i : pis) {
    BoundaryDivisor d;
    d.kind = BoundaryDivisor::Kind::pi;
    d.pi_side = i;
    std::vector<Mask> singles;
    for (int j = 0; j < n; ++j) singles.push_back(bit(j));
    d.graph = make_graph(g, singles, {full & ~i});
    out.push_back(std::move(d));
  }
  if (n >= 4) {
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        if (!k.contains(bit(s) | bit(t))) continue;
        BoundaryDivisor d;
        d.kind = BoundaryDivisor::Kind::sigma;
        d.s = s;
        d.t = t;
        std::vector<Mask> blocks{static_cast<Mask>(bit(s) | bit(t))};
        for (int j = 0; j < n; ++j)
          if (j != s && j != t) blocks.push_back(bit(j));
        d.graph = make_graph(g, std::move(blocks), {});
        out.push_back(std::move(d));
      }
  }
  return out;
}

bool disjoint(const SimplicialComplex& k, const BoundaryDivisor& d1,
              const BoundaryDivisor& d2) {
  if (d1 == d2) throw ValidationError("disjointness is asked of distinct divisors");
  return generic_meet(k, d1.graph, d2.graph).empty();
}

bool disjoint_three_case(const BoundaryDivisor& d1, const BoundaryDivisor& d2,
                         const SimplicialComplex& k) {
  using Kind = BoundaryDivisor::Kind;
  if (d1.kind == Kind::sigma && d2.kind == Kind::sigma) {
    Mask u = bit(d1.s) | bit(d1.t) | bit(d2.s) | bit(d2.t);
    if (popcount(u) == 3) return !k.contains(u);
    return false;
  }
  if (d1.kind == Kind::pi && d2.kind == Kind::pi) {
    Mask i = d1.pi_side, j = d2.pi_side, full = k.ground().full_mask();
    Mask jc = full & ~j;
    bool nested = (i & ~j) == 0 || (i & ~jc) == 0 || (j & ~i) == 0 || (jc & ~i) == 0;
    return !nested;
  }
  const BoundaryDivisor& sig = d1.kind == Kind::sigma ? d1 : d2;
  const BoundaryDivisor& pi = d1.kind == Kind::sigma ? d2 : d1;
  bool s_in = (pi.pi_side & bit(sig.s)) != 0;
  bool t_in = (pi.pi_side & bit(sig.t)) != 0;
  return s_in != t_in;
}

InducedComplex induced_complex(const SimplicialComplex& k, const KStableGraph& graph,
                               int vertex_id) {
  auto verts = vertices(graph);
  if (vertex_id < 0 || vertex_id >= static_cast<int>(verts.size()))
    throw ValidationError("no such vertex");
  const VertexView& v = verts[vertex_id];

  InducedComplex out{SimplicialComplex::discrete(k.ground()), {}, {}};
  std::vector<std::string> labels;
  for (int b : v.block_ids) {
    labels.push_back(k.ground().label(lowest_bit(graph.blocks[b])));
    out.element_marks.push_back(graph.blocks[b]);
    out.element_split.push_back(-1);
  }
  for (int s : v.split_ids) {
    labels.push_back("(e" + std::to_string(s) + ")");
    out.element_marks.push_back(0);
    out.element_split.push_back(s);
  }
  GroundSet ground(labels);

  int legs = static_cast<int>(v.block_ids.size());
  int edges = static_cast<int>(v.split_ids.size());
  std::vector<Mask> facets;
  std::vector<Mask> leg_faces;
  for (Mask a = 1; a < (Mask{1} << legs); ++a) {
    Mask marks = 0;
    for (int i = 0; i < legs; ++i)
      if (a & bit(i)) marks |= graph.blocks[v.block_ids[i]];
    if (k.contains(marks)) leg_faces.push_back(a);
  }
  for (Mask a : leg_faces) {
    bool maximal = true;
    for (Mask c : leg_faces)
      if (c != a && (a & ~c) == 0) {
        maximal = false;
        break;
      }
    if (maximal) facets.push_back(a);
  }
  for (int i = 0; i < edges; ++i) facets.push_back(bit(legs + i));

  out.complex = SimplicialComplex::from_facets(std::move(ground), std::move(facets));
  if (!out.complex.at_least_triparted()) {
    throw InternalError("induced vertex complex is not at least triparted");
  }
  return out;
}

}  // namespace m0k
