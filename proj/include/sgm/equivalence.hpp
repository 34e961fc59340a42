#pragma once

#include <string>
#include <vector>

#include "sgm/matrix.hpp"
#include "sgm/sg_enum.hpp"

namespace sgm {

// 0/1 support of D for a standard representation [I | D]. Rows are labelled
// by the basis element owning each unit column, columns by the remaining
// elements in matrix order.
struct FundamentalIncidence {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<int>> dsharp;
    // Matrix column of each row's unit vector and of each D column.
    std::vector<std::size_t> row_positions;
    std::vector<std::size_t> col_positions;

    friend bool operator==(const FundamentalIncidence&, const FundamentalIncidence&) = default;
};

// The matrix must contain every unit vector e_i as a column; the first such
// column is taken as the basis element of row i.
FundamentalIncidence fundamental_incidence(const Gf3Matrix& rep);
FundamentalIncidence fundamental_incidence(const DyadicMatrix& rep);
FundamentalIncidence fundamental_incidence(const ExactMatrix& rep);

// n minus the number of components of the bipartite graph on rows and
// columns with an edge per nonzero of D.
std::size_t cycle_basis_size(const FundamentalIncidence& fi);

struct ForestEdge {
    std::string row;
    std::string col;
    friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
};
using Forest = std::vector<ForestEdge>;

// Breadth-first spanning forest of the bipartite graph. Vertices are visited
// in groundset order (rows and columns interleaved by their position in the
// matrix), neighbours likewise.
Forest spanning_forest(const FundamentalIncidence& fi);

// Row and column scalings of D (the unit columns are rescaled back) that put
// targets[k] at the position of forest edge k. Leaves are peeled smallest
// groundset position first and fixed in reverse peel order.
// Errors: InvalidForest (cycle, unknown label, or edge on a zero entry),
// ZeroTarget, and NonDyadicDivision when a dyadic factor leaves Z[1/2].
Gf3Matrix normalize_brylawski(const Gf3Matrix& rep, const Forest& forest, const std::vector<Gf3>& targets);
DyadicMatrix normalize_brylawski(const DyadicMatrix& rep, const Forest& forest, const std::vector<Dyadic>& targets);

// Same peeling, but every scaling factor must be +-1; UnreachableTarget is
// thrown as soon as a target is not plus or minus the current entry.
Gf3Matrix normalize_restricted(const Gf3Matrix& rep, const Forest& forest, const std::vector<Gf3>& targets);
DyadicMatrix normalize_restricted(const DyadicMatrix& rep, const Forest& forest, const std::vector<Dyadic>& targets);

// Equal support and equal all-ones normal forms on a common spanning forest.
// Different supports give false. Both matrices need the same labels and the
// same unit columns.
bool projectively_equivalent(const Gf3Matrix& a, const Gf3Matrix& b);
bool projectively_equivalent(const DyadicMatrix& a, const DyadicMatrix& b);
// Representations are first put in reduced row echelon form over Q.
bool projectively_equivalent(const SgRepresentation& a, const SgRepresentation& b);

enum class RowField { rationals, gf3 };

// Reduced row echelon form of a representation: over Q from the {-1,0,1}
// lift of its GF(3) entries, or directly over GF(3).
ExactMatrix row_reduced(const SgRepresentation& rep, RowField field = RowField::rationals);
// Serialized rref; equal fingerprints mean row-equivalent.
std::string row_fingerprint(const SgRepresentation& rep, RowField field = RowField::rationals);

// Throws LabelMismatch when the column labels differ.
bool row_equivalent(const SgRepresentation& a, const SgRepresentation& b, RowField field = RowField::rationals);

struct RowClass {
    std::vector<std::size_t> members;  // indices into the input, ascending
    std::string fingerprint;
};

// Classes ordered by their smallest member.
std::vector<RowClass> classify_row_equivalence(const std::vector<SgRepresentation>& reps,
                                               RowField field = RowField::rationals);

// Sizes in descending order, e.g. {9, 1, 1}.
std::vector<std::size_t> class_sizes(const std::vector<RowClass>& classes);

// Text report: a summary line, then one block per class with its members and
// fingerprint.
std::string format_partition_report(const std::vector<RowClass>& classes);

}  // namespace sgm
