#include "sgm/census.hpp"

#include <sstream>

#include "sgm/errors.hpp"

namespace sgm {

std::string to_string(CensusKind k) {
    switch (k) {
        case CensusKind::all_row_equivalent: return "all";
        case CensusKind::none_row_equivalent: return "none";
        case CensusKind::mixed: return "mixed";
        case CensusKind::single_representation: return "single";
        case CensusKind::not_signed_graphic: return "not-signed-graphic";
    }
    return "?";
}

CensusKind census_kind(const std::vector<RowClass>& classes, std::size_t rep_count) {
    if (rep_count == 0) return CensusKind::not_signed_graphic;
    if (rep_count == 1) return CensusKind::single_representation;
    if (classes.size() == 1) return CensusKind::all_row_equivalent;
    if (classes.size() == rep_count) return CensusKind::none_row_equivalent;
    return CensusKind::mixed;
}

CensusRow census_row(const CatalogEntry& entry, const CensusOptions& opt) {
    CensusRow row;
    row.id = entry.id;
    row.size = entry.size();
    row.rank = entry.rank();
    auto reps = enumerate_signed_graphic(LinearMatroid(ExactMatrix(entry.rep)));
    auto classes = classify_row_equivalence(reps, opt.field);
    row.rep_count = reps.size();
    row.class_sizes = class_sizes(classes);
    row.kind = census_kind(classes, reps.size());
    return row;
}

std::vector<CensusRow> run_census(const std::vector<CatalogEntry>& catalog, const CensusOptions& opt) {
    std::vector<CensusRow> rows;
    rows.reserve(catalog.size());
    for (const auto& e : catalog) {
        try {
            rows.push_back(census_row(e, opt));
        } catch (const std::exception& ex) {
            throw Error("census entry " + e.id + ": " + ex.what());
        }
    }
    return rows;
}

CensusTally tally(const std::vector<CensusRow>& rows) {
    CensusTally t;
    for (const auto& r : rows) {
        switch (r.kind) {
            case CensusKind::all_row_equivalent: ++t.all; break;
            case CensusKind::none_row_equivalent: ++t.none; break;
            case CensusKind::mixed: ++t.mixed; break;
            case CensusKind::single_representation: ++t.single; break;
            case CensusKind::not_signed_graphic: ++t.not_signed_graphic; break;
        }
    }
    return t;
}

std::string format_census(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << r.id << ' ' << r.size << ' ' << r.rank << " reps=" << r.rep_count << " classes=";
        for (std::size_t k = 0; k < r.class_sizes.size(); ++k) out << (k ? "," : "") << r.class_sizes[k];
        if (r.class_sizes.empty()) out << '-';
        out << ' ' << to_string(r.kind) << '\n';
    }
    CensusTally t = tally(rows);
    out << "all/none/mixed: " << t.all << " / " << t.none << " / " << t.mixed << '\n';
    out << "single representation: " << t.single << '\n';
    out << "not signed-graphic: " << t.not_signed_graphic << '\n';
    return out.str();
}

}  // namespace sgm
