#pragma once

// Exhaustive reference implementations of the combinatorial operations,
// following the defining conditions directly (candidate enumeration and
// vertex-replacement search) with none of the shortcuts the main code
// takes.  The self-test and the test suites compare the two on small
// marking sets.

#include <set>
#include <vector>

#include "m0k/complex.hpp"
#include "m0k/graph.hpp"

namespace m0k::reference {

/// Every set partition of an n-element set, no face filtering.
std::vector<std::vector<Mask>> all_set_partitions(int n);

/// Minimal number of parts over all partitions of S into faces.  The
/// singleton partition always qualifies, so the minimum exists.
int min_face_partition_parts(const SimplicialComplex& k);

/// All valid graphs by trying every (partition, split subset) pair and
/// keeping the ones validate() accepts.  Exponential; fine for #S <= 5.
std::set<KStableGraph> brute_enumerate(const SimplicialComplex& k);

/// Everything obtainable from `base` by replacing each vertex with a graph
/// stable for that vertex's induced complex, glued back along the edges.
std::set<KStableGraph> gamma_structure_closure(const SimplicialComplex& k,
                                               const KStableGraph& base);

}  // namespace m0k::reference
