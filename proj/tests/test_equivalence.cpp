#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "sgm/equivalence.hpp"
#include "sgm/linalg.hpp"
#include "sgm/property_suites.hpp"
#include "sgm/random_instances.hpp"
#include "test_support.hpp"

using namespace sgm;
using sgm::testing::load_dyadic;
using sgm::testing::load_reps;

namespace {

DyadicMatrix dyadic(const std::string& text) { return std::get<DyadicMatrix>(parse_matrix(text)); }

// Union-find acyclicity check on the bipartite graph of a forest.
bool acyclic(const Forest& f) {
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        return it->second = find(it->second);
    };
    for (const auto& e : f) {
        auto a = find(e.row), b = find(e.col);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

Gf3Matrix non_fano_gf3() { return project_mod3(load_dyadic("non_fano.txt")); }

}  // namespace

TEST_CASE("non-Fano fundamental incidence") {
    auto fi = fundamental_incidence(load_dyadic("non_fano.txt"));
    CHECK(fi.row_labels == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(fi.col_labels == std::vector<std::string>{"e4", "e5", "e6", "e7"});
    CHECK(fi.dsharp == std::vector<std::vector<int>>{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
    CHECK(cycle_basis_size(fi) == 6);
    CHECK(fundamental_incidence(non_fano_gf3()) == fi);

    auto forest = spanning_forest(fi);
    CHECK(forest.size() == 6);
    CHECK(acyclic(forest));
    for (const auto& e : forest) {
        auto r = std::find(fi.row_labels.begin(), fi.row_labels.end(), e.row) - fi.row_labels.begin();
        auto c = std::find(fi.col_labels.begin(), fi.col_labels.end(), e.col) - fi.col_labels.begin();
        CHECK(fi.dsharp[r][c] == 1);
    }
    CHECK(spanning_forest(fi) == forest);
}

TEST_CASE("degenerate incidence graphs") {
    auto zero = fundamental_incidence(dyadic("2 4 dyadic\n1 0 0 0\n0 1 0 0\n"));
    CHECK(zero.dsharp == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
    CHECK(cycle_basis_size(zero) == 0);
    CHECK(spanning_forest(zero).empty());

    auto single = fundamental_incidence(dyadic("2 4 dyadic\n1 0 4 0\n0 1 0 0\n"));
    CHECK(cycle_basis_size(single) == 1);
    CHECK(spanning_forest(single) == Forest{{"e1", "e3"}});

    // A bipartite path e1 - e3 - e2 - e4.
    auto path = fundamental_incidence(dyadic("2 4 dyadic\n1 0 1 0\n0 1 1 -1\n"));
    CHECK(cycle_basis_size(path) == 3);
    CHECK(spanning_forest(path).size() == 3);

    // Support does not see scalings.
    auto scaled = fundamental_incidence(dyadic("2 4 dyadic\n1 0 -1/2 0\n0 1 2 4\n"));
    CHECK(scaled.dsharp == path.dsharp);
}

TEST_CASE("Brylawski normalization examples") {
    auto d = dyadic("1 2 dyadic\n1 2\n");
    Forest f{{"e1", "e2"}};
    auto n = normalize_brylawski(d, f, {Dyadic(1)});
    CHECK(n(0, 0) == Dyadic(1));
    CHECK(n(0, 1) == Dyadic(1));
    CHECK_THROWS_AS(normalize_brylawski(d, f, {Dyadic(0)}), ZeroTarget);
    CHECK(normalize_brylawski(d, f, {Dyadic(3)})(0, 1) == Dyadic(3));
    CHECK_THROWS_AS(normalize_brylawski(dyadic("1 2 dyadic\n1 3\n"), f, {Dyadic(1)}), NonDyadicDivision);

    auto nf = non_fano_gf3();
    auto forest = spanning_forest(fundamental_incidence(nf));
    std::vector<Gf3> ones(forest.size(), Gf3(1));
    auto canon = normalize_brylawski(nf, forest, ones);
    CHECK(normalize_brylawski(canon, forest, ones) == canon);
    for (std::size_t i = 0; i < 3; ++i) CHECK(canon(i, i) == Gf3(1));
    auto fi = fundamental_incidence(canon);
    for (const auto& e : forest) {
        auto r = std::find(fi.row_labels.begin(), fi.row_labels.end(), e.row) - fi.row_labels.begin();
        CHECK(canon(r, fi.col_positions[std::find(fi.col_labels.begin(), fi.col_labels.end(), e.col) -
                                        fi.col_labels.begin()]) == Gf3(1));
    }
    CHECK(fundamental_incidence(canon).dsharp == fundamental_incidence(nf).dsharp);

    Forest cycle{{"e1", "e6"}, {"e2", "e6"}, {"e2", "e7"}, {"e1", "e7"}};
    CHECK_THROWS_AS(normalize_brylawski(nf, cycle, std::vector<Gf3>(4, Gf3(1))), InvalidForest);
    CHECK_THROWS_AS(normalize_brylawski(nf, Forest{{"e1", "e4"}}, {Gf3(1)}), InvalidForest);
    CHECK_THROWS_AS(normalize_brylawski(nf, Forest{{"e1", "e9"}}, {Gf3(1)}), InvalidForest);
}

TEST_CASE("normalization is canonical under random scalings") {
    auto r = check_normalization_canonical(11, 1000);
    CHECK_MESSAGE(r.passed(), r.first_failure);
    CHECK(r.trials == 1000);
}

TEST_CASE("restricted normalization") {
    auto d = dyadic("1 2 dyadic\n1 2\n");
    Forest f{{"e1", "e2"}};
    auto n = normalize_restricted(d, f, {Dyadic(-2)});
    CHECK(n(0, 1) == Dyadic(-2));
    CHECK(n(0, 0) == Dyadic(1));
    CHECK(normalize_restricted(d, f, {Dyadic(2)}) == d);
    CHECK_THROWS_AS(normalize_restricted(d, f, {Dyadic(1)}), UnreachableTarget);

    // Every fixture representation accepts its own entries up to sign.
    for (const char* which : {"a", "b", "c"}) {
        for (const auto& rep : load_reps(std::string("matroid_") + which + "_reps.txt")) {
            auto std_form = std::get<DyadicMatrix>(row_reduced(rep));
            auto fi = fundamental_incidence(std_form);
            auto forest = spanning_forest(fi);
            std::vector<Dyadic> targets;
            for (std::size_t k = 0; k < forest.size(); ++k) {
                auto r = std::find(fi.row_labels.begin(), fi.row_labels.end(), forest[k].row) - fi.row_labels.begin();
                auto c = fi.col_positions[std::find(fi.col_labels.begin(), fi.col_labels.end(), forest[k].col) -
                                          fi.col_labels.begin()];
                targets.push_back(k % 2 ? -std_form(r, c) : std_form(r, c));
            }
            CHECK_NOTHROW(normalize_restricted(std_form, forest, targets));
        }
    }

    auto r = check_restricted_normalization(12, 1000);
    CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("row equivalence on the fixture representations") {
    auto b = load_reps("matroid_b_reps.txt");
    auto c = load_reps("matroid_c_reps.txt");
    CHECK(row_equivalent(b[0], b[1]));
    CHECK_FALSE(row_equivalent(c[0], c[1]));
    CHECK(row_equivalent(c[0], c[0]));

    SgRepresentation permuted = c[0];
    for (std::size_t j = 0; j < permuted.matrix.cols(); ++j) {
        std::swap(permuted.matrix(0, j), permuted.matrix(1, j));
        permuted.matrix(2, j) = -permuted.matrix(2, j);
    }
    CHECK(row_equivalent(c[0], permuted));

    SgRepresentation relabelled = c[0];
    auto labels = relabelled.matrix.col_labels();
    std::swap(labels[0], labels[1]);
    relabelled.matrix.set_col_labels(labels);
    CHECK_THROWS_AS(row_equivalent(c[0], relabelled), LabelMismatch);
}

TEST_CASE("fixture partitions") {
    CHECK(class_sizes(classify_row_equivalence(load_reps("matroid_a_reps.txt"))) ==
          std::vector<std::size_t>{9, 1, 1});
    CHECK(class_sizes(classify_row_equivalence(load_reps("matroid_b_reps.txt"))) == std::vector<std::size_t>{15});
    CHECK(class_sizes(classify_row_equivalence(load_reps("matroid_c_reps.txt"))) ==
          std::vector<std::size_t>{1, 1, 1});

    auto classes = classify_row_equivalence(load_reps("matroid_a_reps.txt"));
    for (std::size_t k = 1; k < classes.size(); ++k) CHECK(classes[k - 1].members[0] < classes[k].members[0]);
    auto report = format_partition_report(classes);
    CHECK(report.find("9") != std::string::npos);
    CHECK(report.find(classes[0].fingerprint) != std::string::npos);
}

TEST_CASE("row equivalence over GF(3) merges the fixture classes") {
    // Over GF(3) every pair of standard-form representations of one matroid
    // shares its rref, so the fixture partitions collapse.
    CHECK(class_sizes(classify_row_equivalence(load_reps("matroid_c_reps.txt"), RowField::gf3)).size() <
          3);
    CHECK(class_sizes(classify_row_equivalence(load_reps("matroid_a_reps.txt"), RowField::gf3)).size() < 3);
}

TEST_CASE("projective equivalence") {
    Rng rng(5);
    auto base = load_dyadic("matroid_b_dyadic.txt");
    for (int t = 0; t < 20; ++t) CHECK(projectively_equivalent(base, random_row_column_scaling(rng, base)));

    auto nf = load_dyadic("non_fano.txt");
    auto other = nf;
    other(0, 3) = Dyadic(1);  // changes the support
    CHECK_FALSE(projectively_equivalent(nf, other));

    auto b = load_reps("matroid_b_reps.txt");
    CHECK(projectively_equivalent(b[0], b[1]));
}

TEST_CASE("the two unmatched representations of matroid A") {
    auto reps = load_reps("matroid_a_reps.txt");
    auto classes = classify_row_equivalence(reps);
    std::vector<std::size_t> singles;
    for (const auto& c : classes)
        if (c.members.size() == 1) singles.push_back(c.members[0]);
    REQUIRE(singles.size() == 2);
    const auto& x = reps[singles[0]];
    const auto& y = reps[singles[1]];
    CHECK_FALSE(row_equivalent(x, y));
    // Recorded outcome: their all-ones normal forms agree, so the two differ
    // only by row and column scalings.
    CHECK(projectively_equivalent(x, y));
    CHECK(fundamental_incidence(std::get<DyadicMatrix>(row_reduced(x))).dsharp ==
          fundamental_incidence(std::get<DyadicMatrix>(row_reduced(y))).dsharp);
}

TEST_CASE("row equivalence is an equivalence relation") {
    auto r = run_suite("equivalence", SuiteOptions{3, 0.2});
    for (const auto& c : r) CHECK_MESSAGE(c.passed(), (c.name + ": " + c.first_failure));
}
