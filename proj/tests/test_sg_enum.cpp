#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sgm/dyadic_gen.hpp"
#include "sgm/linalg.hpp"
#include "sgm/random_instances.hpp"
#include "sgm/sg_enum.hpp"
#include "sgm/signed_graph.hpp"
#include "test_support.hpp"

using namespace sgm;
using sgm::testing::load_dyadic;
using sgm::testing::load_reps;

namespace {

LinearMatroid fixture(const std::string& which) {
    return LinearMatroid(ExactMatrix(load_dyadic("matroid_" + which + "_dyadic.txt")));
}

bool at_most_two_per_column(const Gf3Matrix& a) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.nonzeros_in_column(j) > 2) return false;
    return true;
}

// Drives the public step functions directly and collects terminal blocks.
void drive(const SearchState& s, std::vector<SgRepresentation>& out, SearchOptions opt) {
    if (s.terminal()) {
        Gf3Matrix a = s.element_block();
        if (at_most_two_per_column(a)) out.push_back(SgRepresentation{a, {}});
        return;
    }
    for (std::size_t x = 0; x < s.X.cols(); ++x) {
        if (is_grow_candidate(s, x)) {
            if (auto c = step_grow(s, x, opt)) drive(*c, out, opt);
        } else if (is_loop_candidate(s, x)) {
            if (auto c = step_negative_loop(s, x, opt)) drive(*c, out, opt);
        }
    }
    for (const auto& c : step_new_component(s, opt))
        if (c) drive(*c, out, opt);
}

}  // namespace

TEST_CASE("three-nonzero condition examples") {
    CHECK_FALSE(satisfies_property1(Gf3Matrix::from_ints({{1}, {1}, {1}}), 3));
    CHECK(satisfies_property1(Gf3Matrix::from_ints({{1}, {1}, {1}, {1}}), 3));
    auto thin = Gf3Matrix::from_ints({{1, 0, 1}, {1, 1, 0}, {0, 1, 0}});
    for (std::size_t n = 0; n <= 3; ++n) CHECK(satisfies_property1(thin, n));
}

TEST_CASE("initial state and the first loop step") {
    auto r = Gf3Matrix::from_ints({{1, 0, 1, 1}, {0, 1, 1, 2}});
    auto s = initial_state(r);
    CHECK(s.next_row == 0);
    CHECK(s.X.cols() == 4);  // (3^2 - 1) / 2 projective points
    // With nothing chosen, only unit vectors can become a negative loop.
    std::size_t loops = 0;
    for (std::size_t x = 0; x < s.X.cols(); ++x) {
        CHECK_FALSE(is_grow_candidate(s, x));
        bool unit = s.X.nonzeros_in_column(x) == 1;
        CHECK(is_loop_candidate(s, x) == unit);
        loops += unit;
    }
    CHECK(loops == 2);
    CHECK(step_new_component(s).size() == 4);
    // X column 0 is the unit vector e2 in lexicographic point order.
    REQUIRE(s.X(0, 0).is_zero());
    auto next = step_negative_loop(s, 0);
    REQUIRE(next);
    CHECK(next->next_row == 1);
    // Pivoting on e2 only moves row 2 to the top.
    auto a = next->element_block();
    for (std::size_t j = 0; j < r.cols(); ++j) {
        CHECK(a(0, j) == r(1, j));
        CHECK(a(1, j) == r(0, j));
    }
    CHECK_THROWS_AS(step_grow(s, 0), Error);
    CHECK_THROWS_AS(step_negative_loop(s, 3), Error);
}

TEST_CASE("every step keeps the element block row-equivalent to the input") {
    auto r = Gf3Matrix::from_ints({{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
    LinearMatroid m{ExactMatrix(r)};
    SearchOptions none;
    none.property1_pruning = false;
    none.processed_count_pruning = false;
    std::vector<SearchState> frontier{initial_state(r)};
    std::size_t seen = 0;
    while (!frontier.empty()) {
        SearchState cur = frontier.back();
        frontier.pop_back();
        ++seen;
        Gf3Matrix a = cur.element_block();
        a.set_col_labels(m.groundset());
        CHECK(matroids_equal(LinearMatroid(ExactMatrix(a)), m));
        CHECK(cur.R.cols() == cur.next_row + r.cols());
        if (cur.terminal()) continue;
        for (std::size_t x = 0; x < cur.X.cols(); ++x) {
            std::optional<SearchState> c;
            if (is_grow_candidate(cur, x)) c = step_grow(cur, x, none);
            else if (is_loop_candidate(cur, x)) c = step_negative_loop(cur, x, none);
            if (c) {
                CHECK(c->next_row == cur.next_row + 1);
                frontier.push_back(*c);
            }
        }
        for (auto& c : step_new_component(cur, none))
            if (c) frontier.push_back(*c);
    }
    CHECK(seen > 10);
}

TEST_CASE("pruned steps are exactly the three-nonzero violations") {
    Rng rng(21);
    SearchOptions p1;
    p1.processed_count_pruning = false;
    SearchOptions none = p1;
    none.property1_pruning = false;
    std::size_t pruned = 0;
    for (int t = 0; t < 6; ++t) {
        auto rep = random_signed_graphic_rep(rng, 4, 7);
        std::vector<SearchState> frontier{initial_state(rep)};
        while (!frontier.empty()) {
            SearchState cur = frontier.back();
            frontier.pop_back();
            if (cur.terminal()) continue;
            for (std::size_t x = 0; x < cur.X.cols(); ++x) {
                if (!is_grow_candidate(cur, x) && !is_loop_candidate(cur, x)) continue;
                auto step = is_grow_candidate(cur, x) ? step_grow : step_negative_loop;
                auto with = step(cur, x, p1);
                auto without = step(cur, x, none);
                if (!without) {
                    // The condition is always enforced once every row is processed.
                    CHECK(cur.next_row + 1 == cur.R.rows());
                    CHECK_FALSE(with);
                    continue;
                }
                bool ok = satisfies_property1(without->element_block(), without->next_row);
                CHECK(with.has_value() == ok);
                if (!with) ++pruned;
                if (with && frontier.size() < 200) frontier.push_back(*with);
            }
            for (auto& c : step_new_component(cur, p1))
                if (c && frontier.size() < 200) frontier.push_back(*c);
        }
    }
    CHECK(pruned > 0);
}

TEST_CASE("manual drive of the step functions agrees with the search") {
    Rng rng(8);
    for (int t = 0; t < 8; ++t) {
        auto rep = random_signed_graphic_rep(rng, 4, 6);
        LinearMatroid m{ExactMatrix(rep)};
        std::vector<SgRepresentation> raw;
        drive(initial_state(gf3_rep(m)), raw, SearchOptions{});
        for (auto& r : raw) r.matrix.set_col_labels(m.groundset());
        CHECK(dedup_representations(raw) == enumerate_signed_graphic(m));
    }
}

TEST_CASE("rank one and disconnected inputs") {
    LinearMatroid u11{ExactMatrix(Gf3Matrix::from_ints({{1}}))};
    auto reps = enumerate_signed_graphic(u11);
    REQUIRE(reps.size() == 1);
    auto g = from_representation(reps[0]);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0].is_loop());
    CHECK(g.edges()[0].negative());

    auto two_triangles = Gf3Matrix::from_ints(
        {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}});
    LinearMatroid dsum{ExactMatrix(two_triangles)};
    auto dreps = enumerate_signed_graphic(dsum);
    CHECK_FALSE(dreps.empty());
    for (const auto& r : dreps) CHECK(matroids_equal(LinearMatroid(ExactMatrix(r.matrix)), dsum));
}

TEST_CASE("dedup by row permutation and negation") {
    auto a = Gf3Matrix::from_ints({{1, 0, 1}, {0, 1, 1}});
    auto permuted = Gf3Matrix::from_ints({{0, 1, 1}, {1, 0, 1}});
    auto negated = Gf3Matrix::from_ints({{2, 0, 2}, {0, 1, 1}});
    auto other = Gf3Matrix::from_ints({{1, 0, 1}, {0, 1, 2}});
    auto out = dedup_representations({{a, {"v1", "v2"}}, {permuted, {"v1", "v2"}}, {negated, {"v1", "v2"}},
                                      {other, {"v1", "v2"}}});
    CHECK(out.size() == 2);
}

TEST_CASE("fixture representation counts") {
    const std::vector<std::pair<std::string, std::size_t>> expected{{"a", 11}, {"b", 15}, {"c", 3}};
    for (const auto& [which, count] : expected) {
        auto m = fixture(which);
        auto reps = enumerate_signed_graphic(m);
        CHECK(reps.size() == count);
        for (const auto& r : reps) {
            CHECK(at_most_two_per_column(r.matrix));
            CHECK(matroids_equal(LinearMatroid(ExactMatrix(r.matrix)), m));
        }
        // Every displayed representation is found.
        auto shown = load_reps("matroid_" + which + "_reps.txt");
        CHECK(shown.size() == count);
        for (const auto& s : shown) {
            auto c = canonical_representation(s);
            CHECK(std::find(reps.begin(), reps.end(), c) != reps.end());
        }
    }
}

TEST_CASE("optional pruning never changes the output") {
    auto m = fixture("c");
    auto base = enumerate_signed_graphic(m);
    SearchOptions plain;
    plain.property1_pruning = false;
    plain.processed_count_pruning = false;
    plain.memoize_chosen_sets = false;
    CHECK(enumerate_signed_graphic(m, plain) == base);
    SearchOptions memo_only = plain;
    memo_only.memoize_chosen_sets = true;
    CHECK(enumerate_signed_graphic(m, memo_only) == base);
}

TEST_CASE("search agrees with the point-subset oracle on small matroids") {
    Rng rng(2);
    for (int t = 0; t < 12; ++t) {
        ExactMatrix rep = t % 2 ? ExactMatrix(random_weak_dyadic(rng, 3, 7))
                                : ExactMatrix(random_signed_graphic_rep(rng, 4, 7));
        LinearMatroid m{rep};
        CHECK(enumerate_signed_graphic(m) == representations_by_point_subsets(m));
    }
}

TEST_CASE("search agrees with the row-space oracle on the rank-5 fixture") {
    auto m = fixture("c");
    CHECK(enumerate_signed_graphic(m) == representations_by_row_space(m));
}

TEST_CASE("signed-graphic recognition") {
    auto thin = Gf3Matrix::from_ints({{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(is_signed_graphic(ExactMatrix(thin)).has_value());
    CHECK(is_signed_graphic(ExactMatrix(load_dyadic("matroid_a_dyadic.txt"))).has_value());
    CHECK_FALSE(is_signed_graphic(ExactMatrix(p8_rep())).has_value());
}

TEST_CASE("representation text round-trips") {
    for (const auto& r : enumerate_signed_graphic(fixture("b"))) {
        CHECK(parse_representation(format_representation(r)) == r);
    }
    CHECK_THROWS_AS(parse_representation("2 2 dyadic\n1 0\n0 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_representation("vertices v1\n2 2 gf3\n1 0\n0 1\n"), ParseError);
    CHECK(parse_representation("2 2 gf3\n1 0\n0 1\n").vertex_labels.size() == 2);
}
