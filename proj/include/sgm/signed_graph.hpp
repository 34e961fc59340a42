#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgm/matrix.hpp"
#include "sgm/matroid.hpp"
#include "sgm/sg_enum.hpp"

namespace sgm {

enum class Sign { positive, negative };

inline Sign operator!(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

// Edge of a signed graph. Loops have u == v. Each end carries a direction,
// +1 for an end pointing into its vertex and -1 for one pointing out; a
// non-loop edge is negative exactly when both ends point the same way.
struct Edge {
    std::string label;
    std::size_t u = 0;
    std::size_t v = 0;
    Sign sign = Sign::positive;
    int dir_u = -1;
    int dir_v = 1;

    bool is_loop() const { return u == v; }
    bool negative() const { return sign == Sign::negative; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(std::vector<std::string> vertex_labels);

    std::size_t add_vertex(const std::string& label);
    // Adds an edge with the default orientation: a positive edge leaves u and
    // enters v, a negative edge enters both ends.
    std::size_t add_edge(const std::string& label, const std::string& u, const std::string& v, Sign sign);
    // Adds a fully specified edge after checking direction/sign consistency.
    std::size_t add_edge(Edge e);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Edge>& mutable_edges() { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::vector<std::string> edge_labels() const;

    std::size_t vertex_index(const std::string& label) const;
    std::size_t edge_index(const std::string& label) const;
    bool has_vertex(const std::string& label) const;

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

// |V| x |E| incidence matrix over GF(3): +1 into the vertex, -1 out of it or
// a negative loop, 0 for non-incidence and positive loops.
Gf3Matrix incidence_matrix(const SignedGraph& g);

// Inverse of incidence_matrix for matrices with at most two nonzeros per
// column. Zero columns become positive loops at the first vertex. Throws
// TooManyNonzeros otherwise.
SignedGraph from_representation(const Gf3Matrix& a, const std::vector<std::string>& vertex_labels);
SignedGraph from_representation(const SgRepresentation& rep);

LinearMatroid graph_matroid(const SignedGraph& g);

// Edge sets that are positive cycles, two negative cycles sharing exactly one
// vertex, or two disjoint negative cycles joined by a path. Members are
// ordered by edge position, like circuits() on the incidence matroid.
SubsetFamily circuits_sg(const SignedGraph& g);

// Same family with labels sorted inside each set and the sets sorted, so
// graphs with different edge orders can be compared.
SubsetFamily label_sorted(const SubsetFamily& f);

// A potential p with sign(e) = p(u) xor p(v) for every non-loop edge, or
// nothing if the graph has a negative cycle (negative loops included).
std::optional<std::vector<int>> balancing_potential(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);
// u == v tests a single blocking vertex.
bool is_blocking_pair(const SignedGraph& g, const std::string& u, const std::string& v);

SignedGraph delete_vertices(const SignedGraph& g, const std::vector<std::string>& doomed);

// Flips every edge with exactly one end in s, reversing the direction of
// those ends. Loops and edges inside s keep their sign.
SignedGraph resign(const SignedGraph& g, const std::vector<std::string>& s);

enum class CutRole { s1, s2, t1, t2 };

// Data for a cylinder flip. side maps each edge label to 1 or 2. roles
// overrides, per (edge label, end index 0 for u / 1 for v), which cut vertex
// an end at a cut vertex attaches through; it is needed only when cut
// vertices coincide. Without an override the first of s1, s2, t1, t2 naming
// the end's vertex is used.
struct CylinderSplit {
    std::string s1, s2, t1, t2;
    std::map<std::string, int> side;
    std::map<std::pair<std::string, int>, CutRole> roles;
};

// Split at the four cut vertices, reflect one side (exchanging s1/s2 and
// t1/t2 attachments) and glue back. The graph is first resigned so that the
// negative edges are exactly the edges of one side with one end attached
// through t1 or t2 (or, symmetrically, through s1 or s2). Throws
// InvalidSplit naming the failed condition.
SignedGraph cylinder_flip(const SignedGraph& g, const CylinderSplit& split);

struct FlipOutcome {
    SignedGraph graph;
    int flipped_side = 0;
    // The same split with every end at a cut vertex given its role in the
    // flipped graph; flipping graph with it undoes the flip up to resigning.
    CylinderSplit inverse_split;
};
FlipOutcome cylinder_flip_detailed(const SignedGraph& g, const CylinderSplit& split);

// circuits_sg equality as label sets. Throws LabelMismatch if the edge label
// sets differ.
bool verify_flip(const SignedGraph& g, const SignedGraph& g2);

// Every split accepted by cylinder_flip, found by brute force over pairs of
// blocking pairs and two-colourings of the pieces left after removing the
// cut. With include_degenerate, pairs sharing a vertex are tried as s1 = t1
// with every role choice for the ends at that vertex.
std::vector<CylinderSplit> find_cylinder_splits(const SignedGraph& g, bool include_degenerate = true);

// True iff some vertex bijection maps g onto h edge by edge (same labels,
// same endpoint sets) with signatures differing by a resigning.
bool switching_isomorphic(const SignedGraph& g, const SignedGraph& h);

}  // namespace sgm
