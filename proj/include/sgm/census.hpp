#pragma once

#include <string>
#include <vector>

#include "sgm/dyadic_gen.hpp"
#include "sgm/equivalence.hpp"
#include "sgm/sg_enum.hpp"

namespace sgm {

// Matroids with at least two representations fall into the first three
// kinds. A single representation makes both "every pair is row-equivalent"
// and "no pair is" vacuous, so it is kept apart.
enum class CensusKind { all_row_equivalent, none_row_equivalent, mixed, single_representation, not_signed_graphic };

std::string to_string(CensusKind k);

CensusKind census_kind(const std::vector<RowClass>& classes, std::size_t rep_count);

struct CensusRow {
    std::string id;
    std::size_t size = 0;
    std::size_t rank = 0;
    std::size_t rep_count = 0;
    std::vector<std::size_t> class_sizes;
    CensusKind kind = CensusKind::not_signed_graphic;
};

struct CensusTally {
    std::size_t all = 0;
    std::size_t none = 0;
    std::size_t mixed = 0;
    std::size_t single = 0;
    std::size_t not_signed_graphic = 0;
};

struct CensusOptions {
    RowField field = RowField::rationals;
};

CensusRow census_row(const CatalogEntry& entry, const CensusOptions& opt = {});
// Per-entry failures are rethrown as Error with the entry id prepended.
std::vector<CensusRow> run_census(const std::vector<CatalogEntry>& catalog, const CensusOptions& opt = {});
CensusTally tally(const std::vector<CensusRow>& rows);

// One line per entry, then the breakdown line "all/none/mixed: a / b / c"
// over matroids with two or more representations, then the remaining counts.
std::string format_census(const std::vector<CensusRow>& rows);

}  // namespace sgm
