#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "m0k/complex.hpp"

namespace m0k {

/// A boundary stratum's dual graph, encoded by the marking partition (one
/// block per leg) and the split system (one bipartition of S per edge).
/// Genus-0 legs-labeled trees have no nontrivial automorphisms, so this
/// encoding is a canonical form: graphs are equal iff encodings are equal.
struct KStableGraph {
  /// Disjoint nonempty blocks covering S, sorted by lowest label.
  std::vector<Mask> blocks;
  /// One mask per edge: the side NOT containing the first ground label,
  /// sorted ascending.  With this orientation two splits are compatible
  /// iff their masks are nested or disjoint.
  std::vector<Mask> splits;

  auto operator<=>(const KStableGraph&) const = default;

  int codimension(const GroundSet& g) const {
    return static_cast<int>(splits.size()) + g.size() - static_cast<int>(blocks.size());
  }
};

/// Canonicalizes raw (blocks, splits) data and checks it is structurally
/// well formed (covering partition, split sides unions of blocks, proper).
/// Throws ValidationError on structural defects; does NOT check the
/// stability/face conditions — that is validate()'s job.
KStableGraph make_graph(const GroundSet& g, std::vector<Mask> blocks,
                        std::vector<Mask> splits);

/// One vertex of the reconstructed tree.
struct VertexView {
  int id = 0;
  std::vector<int> block_ids;
  std::vector<int> split_ids;
  Mask markings = 0;  // union of blocks at this vertex
  int edge_degree() const { return static_cast<int>(split_ids.size()); }
  int n_half_edges() const {
    return static_cast<int>(block_ids.size() + split_ids.size());
  }
};

/// Reconstructs the tree: vertex 0 carries the block with the first label;
/// vertex 1+i sits below split i.  #vertices = #splits + 1.
std::vector<VertexView> vertices(const KStableGraph& graph);

/// Which side of split `s` vertex `v` lies on, as a subset of S.
Mask vertex_side_of_split(const KStableGraph& graph, const std::vector<VertexView>& verts,
                          int vertex_id, int split_id);

struct ValidationReport {
  std::vector<std::string> structural;   // encoding defects
  std::vector<int> failed_conditions;    // subset of {1,2,3,4}
  std::vector<std::string> messages;
  bool structurally_sound() const { return structural.empty(); }
  bool valid() const { return structural.empty() && failed_conditions.empty(); }
};

/// Checks the four defining conditions of a stratum graph:
/// (1) the splits describe a single tree (pairwise compatible),
/// (2) every block is a face,
/// (3) no leaf vertex has its marking set in the complex,
/// (4) every vertex has at least 3 half-edges.
ValidationReport validate(const SimplicialComplex& k, const std::vector<Mask>& blocks,
                          const std::vector<Mask>& splits);

inline ValidationReport validate(const SimplicialComplex& k, const KStableGraph& g) {
  return validate(k, g.blocks, g.splits);
}

/// All valid graphs of the requested codimension (or all codimensions),
/// sorted by (codimension, blocks, splits).
std::vector<KStableGraph> enumerate_graphs(const SimplicialComplex& k,
                                           std::optional<int> codim);

/// Partial order on strata: g1 <= g2 iff g1 degenerates g2, i.e. every
/// block of g2 lies inside a block of g1 and splits(g2) is a subset of
/// splits(g1).
bool leq(const KStableGraph& g1, const KStableGraph& g2);

/// True iff the graph keeps {i,j} together and apart from {k,l}: i,j share
/// a block, or k,l do, or some edge cuts {i,j} from {k,l}.
bool separates(const GroundSet& g, const KStableGraph& graph, int i, int j, int k, int l);

/// The generic meet: 0 or 1 graphs.  The candidate has the join partition
/// (finest common coarsening) and the union of the split systems; it is
/// returned iff it is a valid stratum graph.
std::vector<KStableGraph> generic_meet(const SimplicialComplex& k,
                                       const KStableGraph& g1, const KStableGraph& g2);

/// Codimension-1 stratum with its canonical index.
struct BoundaryDivisor {
  enum class Kind { pi, sigma };
  Kind kind = Kind::pi;
  Mask pi_side = 0;  // canonical side: contains the first ground label
  int s = -1, t = -1;  // sigma only, s < t
  KStableGraph graph;

  bool operator==(const BoundaryDivisor& o) const {
    return kind == o.kind && pi_side == o.pi_side && s == o.s && t == o.t;
  }
  std::string name(const GroundSet& g) const;
};

/// All boundary divisors in canonical order: Pi_I by lexicographic
/// canonical I, then Sigma_st lexicographic.
std::vector<BoundaryDivisor> divisors(const SimplicialComplex& k);

/// True iff the closed strata do not intersect (generic meet is empty).
/// The two divisors must be distinct.
bool disjoint(const SimplicialComplex& k, const BoundaryDivisor& d1,
              const BoundaryDivisor& d2);

/// Diagnostic-only three-case characterization of disjointness; compared
/// against disjoint() in the self-test, mismatches are surfaced.
bool disjoint_three_case(const BoundaryDivisor& d1, const BoundaryDivisor& d2,
                         const SimplicialComplex& k);

/// The complex seen by one vertex: ground elements are the legs (blocks at
/// the vertex) followed by the incident edges; a set of legs is a face iff
/// the union of their blocks is a face of K, and edge elements appear only
/// in singleton faces.
struct InducedComplex {
  SimplicialComplex complex;
  std::vector<Mask> element_marks;  // per ground element: blocks' markings, 0 for edges
  std::vector<int> element_split;   // per ground element: split id, -1 for legs
};
InducedComplex induced_complex(const SimplicialComplex& k, const KStableGraph& graph,
                               int vertex_id);

}  // namespace m0k
