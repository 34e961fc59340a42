#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgm/combinatorics.hpp"
#include "sgm/matrix.hpp"

namespace sgm {

// Family of element-label sets in canonical order: members sorted by
// groundset position, sets sorted lexicographically on those positions.
struct SubsetFamily {
    std::vector<std::vector<std::string>> member_sets;

    std::size_t size() const { return member_sets.size(); }
    friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

// Matroid represented by the columns of an exact matrix. Rows that are not
// needed for full row rank are dropped on construction.
class LinearMatroid {
public:
    explicit LinearMatroid(ExactMatrix rep);

    std::size_t size() const { return labels_.size(); }
    std::size_t rank() const { return rank_; }
    const std::vector<std::string>& groundset() const { return labels_; }
    const ExactMatrix& rep() const { return rep_; }
    Domain domain() const { return domain_of(rep_); }

    Mask full_mask() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }
    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;
    std::size_t index_of(const std::string& label) const;

    // Bases as bitmasks over groundset positions, ascending.
    const std::vector<Mask>& basis_masks() const;
    bool is_basis(Mask m) const;

    int rank_of(Mask subset) const;
    int rank_of(const std::vector<std::string>& subset) const { return rank_of(mask_of(subset)); }

    SubsetFamily family(const std::vector<Mask>& masks) const;

private:
    struct State;

    ExactMatrix rep_;
    std::vector<std::string> labels_;
    std::size_t rank_ = 0;
    std::shared_ptr<State> state_;
};

SubsetFamily bases(const LinearMatroid& m);
SubsetFamily circuits(const LinearMatroid& m);
std::vector<Mask> circuit_masks(const LinearMatroid& m);

// Matrix [I | D] (identity on the chosen basis columns, rows in the order of
// the basis columns) representing the same matroid. Uses the first basis when
// none is given.
ExactMatrix standard_form(const LinearMatroid& m, std::optional<Mask> basis = std::nullopt);

LinearMatroid dual(const LinearMatroid& m);
LinearMatroid delete_element(const LinearMatroid& m, const std::string& e);
LinearMatroid contract_element(const LinearMatroid& m, const std::string& e);
// Restrict to the complement of del and contract con (both label masks).
LinearMatroid minor(const LinearMatroid& m, Mask contract_set, Mask delete_set);

bool is_simple(const LinearMatroid& m);
bool is_cosimple(const LinearMatroid& m);
bool is_connected(const LinearMatroid& m);
bool is_3connected(const LinearMatroid& m);

// Bases compared as label sets; throws GroundsetMismatch on different labels.
bool matroids_equal(const LinearMatroid& a, const LinearMatroid& b);

// Position map p with a's element i sent to b's element p[i], carrying bases
// onto bases. The first such map in lexicographic order is returned.
std::optional<std::vector<std::size_t>> are_isomorphic(const LinearMatroid& a,
                                                       const LinearMatroid& b);

// Isomorphism-invariant fingerprint (rank, sizes, basis counts, circuit
// spectrum) used to bucket candidates before the full search.
std::string isomorphism_invariant(const LinearMatroid& m);

std::string format_family(const SubsetFamily& f);

}  // namespace sgm
