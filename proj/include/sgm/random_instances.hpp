#pragma once

#include <random>

#include "sgm/matrix.hpp"
#include "sgm/signed_graph.hpp"

namespace sgm {

using Rng = std::mt19937_64;

// Random signed graph with 1..max_vertices vertices and 0..max_edges edges,
// including loops, parallel edges and random end orientations.
SignedGraph random_signed_graph(Rng& rng, std::size_t max_vertices = 8, std::size_t max_edges = 12);

// Random vertex subset of g.
std::vector<std::string> random_vertex_subset(Rng& rng, const SignedGraph& g);

// Two all-positive connected graphs H1 and H2 glued at s1, s2, t1, t2 with
// every H2 edge attached through exactly one of t1, t2 made negative, then
// resigned at a random vertex set. With degenerate set, s1 and t1 are the
// same vertex of the glued graph. The split puts H1 on side 1 and H2 on
// side 2 and records the role of every end at a cut vertex.
struct CylinderInstance {
    SignedGraph graph;
    CylinderSplit split;
};
CylinderInstance random_cylinder_instance(Rng& rng, bool degenerate);

// [I_r | D] with entries of D drawn from {0, +-1, +-2, +-1/2}, retried until
// weak dyadic.
DyadicMatrix random_weak_dyadic(Rng& rng, std::size_t r, std::size_t n);

// Incidence matrix of a random connected signed graph without loops, with
// redundant rows removed and brought to standard form over GF(3).
Gf3Matrix random_signed_graphic_rep(Rng& rng, std::size_t vertices, std::size_t edges);

// Row scaling by +-2^a and column scaling by +-2^b, |a|, |b| <= 3. Columns
// that were unit vectors are scaled back, so [I | D] keeps its identity.
DyadicMatrix random_row_column_scaling(Rng& rng, const DyadicMatrix& m);

}  // namespace sgm
