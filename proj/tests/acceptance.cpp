// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "sgm/census.hpp"
#include "sgm/dyadic_gen.hpp"
#include "sgm/equivalence.hpp"
#include "sgm/property_suites.hpp"
#include "sgm/sg_enum.hpp"
#include "test_support.hpp"

using namespace sgm;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what + (ok ? "" : " [mismatch]");
    o.pass = o.pass && ok;
}

void require(Outcome& o, const CheckResult& r) {
    std::ostringstream s;
    s << r.name << " " << (r.trials - r.failures) << "/" << r.trials;
    if (!r.passed()) s << " first failure: " << r.first_failure;
    require(o, r.passed(), s.str());
}

std::string sizes_text(const std::vector<std::size_t>& v) {
    std::ostringstream s;
    for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "+" : "") << v[k];
    return s.str();
}

std::vector<std::vector<SgRepresentation>> fixture_reps;
std::vector<CatalogEntry> catalog;

Outcome criterion1() {
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> expected{{"a", 11}, {"b", 15}, {"c", 3}};
    for (const auto& [which, count] : expected) {
        LinearMatroid m{ExactMatrix(testing::load_dyadic("matroid_" + which + "_dyadic.txt"))};
        fixture_reps.push_back(enumerate_signed_graphic(m));
        std::size_t got = fixture_reps.back().size();
        require(o, got == count, which + ": " + std::to_string(got) + " (expected " + std::to_string(count) + ")");
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    const std::vector<std::vector<std::size_t>> expected{{9, 1, 1}, {15}, {1, 1, 1}};
    const char* names[] = {"a", "b", "c"};
    for (std::size_t k = 0; k < 3; ++k) {
        auto got = class_sizes(classify_row_equivalence(fixture_reps.at(k)));
        require(o, got == expected[k],
                std::string(names[k]) + ": " + sizes_text(got) + " (expected " + sizes_text(expected[k]) + ")");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    catalog = generate_matroids(10);
    require(o, catalog.size() == 69, "generate: " + std::to_string(catalog.size()) + " matroids (expected 69)");
    auto t = tally(run_census(catalog));
    std::ostringstream s;
    s << "census all/none/mixed: " << t.all << " / " << t.none << " / " << t.mixed << " (expected 13 / 39 / 17)"
      << ", single representation " << t.single << ", not signed-graphic " << t.not_signed_graphic;
    require(o, t.all == 13 && t.none == 39 && t.mixed == 17, s.str());
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto k = cycle_basis_size(fundamental_incidence(testing::load_dyadic("non_fano.txt")));
    require(o, k == 6, "non-Fano cycle basis size " + std::to_string(k) + " (expected 6)");
    return o;
}

Outcome criterion5() {
    Outcome o;
    require(o, check_circuits_match_incidence(101, 500));
    require(o, check_enumeration_matches_oracle(102, 50));
    return o;
}

Outcome criterion6() {
    Outcome o;
    require(o, check_resign_preserves_circuits(103, 1000));
    require(o, check_cylinder_flips(104, 100, 20));
    return o;
}

Outcome criterion7() {
    Outcome o;
    require(o, check_normalization_canonical(105, 1000));
    require(o, check_restricted_normalization(106, 1000));
    return o;
}

Outcome criterion8() {
    Outcome o;
    if (catalog.empty()) catalog = generate_matroids(10);
    std::size_t bad = 0;
    std::string first;
    for (const auto& e : catalog) {
        for (long long p : {3LL, 5LL}) {
            if (!projection_preserves_bases(e.rep, p)) {
                if (bad++ == 0) first = e.id + " mod " + std::to_string(p);
            }
        }
    }
    require(o, bad == 0,
            std::to_string(catalog.size()) + " entries checked mod 3 and mod 5" + (bad ? ", first: " + first : ""));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ") ["
                  << static_cast<long long>(secs) << "s]" << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
