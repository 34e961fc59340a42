#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/matrix.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

// A = S^-1 R for an invertible S: r x n over GF(3), columns in groundset
// order, at most two nonzeros per column. Row i is the vertex
// vertex_labels[i] of the corresponding signed graph.
struct SgRepresentation {
    Gf3Matrix matrix;
    std::vector<std::string> vertex_labels;

    friend bool operator==(const SgRepresentation&, const SgRepresentation&) = default;
};

// True iff every column with more than two nonzeros among its first n_rows
// entries still has a nonzero entry further down.
bool satisfies_property1(const Gf3Matrix& a, std::size_t n_rows);

enum class Phase { growing, new_component };

// Node of the search tree. Rows [0, next_row) are processed. R holds the
// chosen basis columns first (an identity block on the processed rows)
// followed by the n element columns; X holds the remaining candidates.
struct SearchState {
    std::size_t next_row = 0;
    Gf3Matrix R;
    Gf3Matrix X;
    Phase phase = Phase::growing;

    std::size_t chosen() const { return next_row; }
    // Element block A of R.
    Gf3Matrix element_block() const;
    bool terminal() const { return next_row == R.rows(); }
};

struct SearchOptions {
    bool property1_pruning = true;
    // Prune as soon as a column has three nonzeros among processed rows; the
    // growth steps can never remove one again.
    bool processed_count_pruning = true;
    // Visit each set of chosen basis points once, whatever order reached it.
    bool memoize_chosen_sets = true;
    // When set, receives the number of interior search nodes visited.
    std::size_t* node_counter = nullptr;
};

// Root state: R is a full-row-rank GF(3) matrix, X is every nonzero column
// of GF(3)^r up to sign in lexicographic order.
SearchState initial_state(const Gf3Matrix& r);

// Shape tests for the growth cases of a candidate column of X.
bool is_grow_candidate(const SearchState& s, std::size_t x);
bool is_loop_candidate(const SearchState& s, std::size_t x);

// Case 1: x has one nonzero above next_row and one at or below it.
std::optional<SearchState> step_grow(const SearchState& s, std::size_t x, SearchOptions opt = {});
// Case 2: the only nonzero of x is at or below next_row.
std::optional<SearchState> step_negative_loop(const SearchState& s, std::size_t x, SearchOptions opt = {});
// Case 3: discard candidates touching processed rows, then try every
// remaining x, pivoting on its first nonzero at or below next_row.
std::vector<std::optional<SearchState>> step_new_component(const SearchState& s, SearchOptions opt = {});

// All signed-graphic representations of m up to row permutation and row
// negation, canonically sorted.
std::vector<SgRepresentation> enumerate_signed_graphic(const LinearMatroid& m, SearchOptions opt = {});

// Quotient by row permutation and row negation. The representative has each
// row scaled so its first nonzero is 1 and rows sorted ascending.
std::vector<SgRepresentation> dedup_representations(std::vector<SgRepresentation> reps);
SgRepresentation canonical_representation(const SgRepresentation& rep);

// Recognizer by exhaustion: a witness for M[I | A], if one exists. Dyadic
// input is projected mod 3 first.
std::optional<SgRepresentation> is_signed_graphic(const ExactMatrix& a);

// Independent oracle: choose r independent vectors of the row space of the
// GF(3) representation so that every column has at most two nonzeros.
std::vector<SgRepresentation> representations_by_row_space(const LinearMatroid& m);

// Literal oracle: try every r-subset of projective points as the new basis.
// Only practical for r <= 3.
std::vector<SgRepresentation> representations_by_point_subsets(const LinearMatroid& m);

// The GF(3) matrix a search starts from (dyadic reps are reduced mod 3).
Gf3Matrix gf3_rep(const LinearMatroid& m);

// Representation file: a "vertices v1 ... vr" line, then the matrix text.
std::string format_representation(const SgRepresentation& rep);
SgRepresentation parse_representation(const std::string& text);

}  // namespace sgm
