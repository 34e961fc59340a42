#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sgm/graph_io.hpp"
#include "sgm/property_suites.hpp"
#include "sgm/random_instances.hpp"
#include "sgm/signed_graph.hpp"
#include "test_support.hpp"

using namespace sgm;

namespace {

SignedGraph triangle(Sign last) {
    SignedGraph g({"a", "b", "c"});
    g.add_edge("x", "a", "b", Sign::positive);
    g.add_edge("y", "b", "c", Sign::positive);
    g.add_edge("z", "c", "a", last);
    return g;
}

SubsetFamily family(std::vector<std::vector<std::string>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    return SubsetFamily{sets};
}

}  // namespace

TEST_CASE("incidence matrix entries") {
    SignedGraph g({"u", "v"});
    g.add_edge("p", "u", "v", Sign::positive);
    g.add_edge("n", "u", "v", Sign::negative);
    g.add_edge("l", "u", "u", Sign::negative);
    g.add_edge("h", "v", "v", Sign::positive);
    auto a = incidence_matrix(g);
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 4);
    CHECK(a(0, 0) == Gf3(-1));
    CHECK(a(1, 0) == Gf3(1));
    CHECK(a(0, 1) == Gf3(1));
    CHECK(a(1, 1) == Gf3(1));
    CHECK(a(0, 2) == Gf3(-1));
    CHECK(a(1, 2).is_zero());
    CHECK(a.nonzeros_in_column(3) == 0);
    CHECK(a.col_labels() == std::vector<std::string>{"p", "n", "l", "h"});
}

TEST_CASE("graphs from representation matrices") {
    auto a = Gf3Matrix::from_ints({{1, 2, 1, 0}, {1, 1, 0, 0}});
    a.set_col_labels({"e1", "e2", "e3", "e4"});
    auto g = from_representation(a, {"v1", "v2"});
    REQUIRE(g.edge_count() == 4);
    CHECK(g.edges()[0].negative());
    CHECK_FALSE(g.edges()[1].negative());
    CHECK(g.edges()[2].is_loop());
    CHECK(g.edges()[2].negative());
    CHECK(g.edges()[3].is_loop());
    CHECK_FALSE(g.edges()[3].negative());
    CHECK(g.edges()[3].u == 0);
    // Columns come back up to sign: a lone +1 is stored as a negative loop (-1).
    auto back = incidence_matrix(g);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool same = true, negated = true;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            same = same && back(i, j) == a(i, j);
            negated = negated && back(i, j) == -a(i, j);
        }
        CHECK((same || negated));
    }
    CHECK(back(0, 2) == Gf3(-1));

    auto dense = Gf3Matrix::from_ints({{1}, {1}, {1}});
    CHECK_THROWS_AS(from_representation(dense, {"a", "b", "c"}), TooManyNonzeros);
}

TEST_CASE("circuit examples") {
    CHECK(label_sorted(circuits_sg(triangle(Sign::positive))) == family({{"x", "y", "z"}}));
    CHECK(circuits_sg(triangle(Sign::negative)).size() == 0);

    SignedGraph tight({"a", "b"});
    tight.add_edge("l1", "a", "a", Sign::negative);
    tight.add_edge("l2", "a", "a", Sign::negative);
    CHECK(label_sorted(circuits_sg(tight)) == family({{"l1", "l2"}}));

    SignedGraph loose({"a", "b", "c"});
    loose.add_edge("l1", "a", "a", Sign::negative);
    loose.add_edge("p", "a", "b", Sign::positive);
    loose.add_edge("q", "b", "c", Sign::negative);
    loose.add_edge("l2", "c", "c", Sign::negative);
    CHECK(label_sorted(circuits_sg(loose)) == family({{"l1", "l2", "p", "q"}}));

    SignedGraph single({"a"});
    single.add_edge("h", "a", "a", Sign::positive);
    CHECK(label_sorted(circuits_sg(single)) == family({{"h"}}));

    // Two negative triangles sharing a vertex: the handcuff is the only circuit.
    SignedGraph bow({"o", "a", "b", "c", "d"});
    bow.add_edge("1", "o", "a", Sign::positive);
    bow.add_edge("2", "a", "b", Sign::positive);
    bow.add_edge("3", "b", "o", Sign::negative);
    bow.add_edge("4", "o", "c", Sign::positive);
    bow.add_edge("5", "c", "d", Sign::positive);
    bow.add_edge("6", "d", "o", Sign::negative);
    CHECK(label_sorted(circuits_sg(bow)) == family({{"1", "2", "3", "4", "5", "6"}}));
}

TEST_CASE("graph circuits match the incidence matroid") {
    auto r = check_circuits_match_incidence(5, 500);
    CHECK_MESSAGE(r.passed(), r.first_failure);
    CHECK(r.trials == 500);
}

TEST_CASE("balance and blocking") {
    CHECK(is_balanced(triangle(Sign::positive)));
    CHECK_FALSE(is_balanced(triangle(Sign::negative)));

    SignedGraph mixed({"a", "b", "c"});
    mixed.add_edge("x", "a", "b", Sign::negative);
    mixed.add_edge("y", "b", "c", Sign::negative);
    mixed.add_edge("z", "c", "a", Sign::positive);
    auto p = balancing_potential(mixed);
    REQUIRE(p);
    for (const auto& e : mixed.edges()) CHECK(((*p)[e.u] != (*p)[e.v]) == e.negative());

    SignedGraph with_loop = triangle(Sign::positive);
    with_loop.add_edge("l", "a", "a", Sign::negative);
    CHECK_FALSE(balancing_potential(with_loop));

    SignedGraph two({"a", "b", "c", "d", "e", "f"});
    two.add_edge("1", "a", "b", Sign::positive);
    two.add_edge("2", "b", "c", Sign::positive);
    two.add_edge("3", "c", "a", Sign::negative);
    two.add_edge("4", "d", "e", Sign::positive);
    two.add_edge("5", "e", "f", Sign::positive);
    two.add_edge("6", "f", "d", Sign::negative);
    two.add_edge("7", "c", "d", Sign::positive);
    CHECK(is_blocking_pair(triangle(Sign::negative), "a", "a"));
    CHECK_FALSE(is_blocking_pair(two, "a", "a"));
    CHECK_FALSE(is_blocking_pair(two, "a", "b"));
    CHECK(is_blocking_pair(two, "a", "e"));
    CHECK(delete_vertices(two, {"a"}).edge_count() == 5);
}

TEST_CASE("resigning") {
    auto g = triangle(Sign::negative);
    auto h = resign(g, {"a"});
    CHECK(h.edges()[0].negative());        // a-b crosses
    CHECK_FALSE(h.edges()[1].negative());  // b-c does not
    CHECK_FALSE(h.edges()[2].negative());  // c-a crosses
    CHECK(resign(h, {"a"}) == g);
    CHECK(resign(g, {}) == g);
    CHECK(label_sorted(circuits_sg(h)) == label_sorted(circuits_sg(g)));

    // Resigning by a balancing potential makes every edge positive.
    SignedGraph path({"a", "b", "c", "d"});
    path.add_edge("1", "a", "b", Sign::negative);
    path.add_edge("2", "b", "c", Sign::positive);
    path.add_edge("3", "c", "d", Sign::negative);
    auto p = balancing_potential(path);
    REQUIRE(p);
    std::vector<std::string> ones;
    for (std::size_t v = 0; v < path.vertex_count(); ++v)
        if ((*p)[v]) ones.push_back(path.vertices()[v]);
    auto flat = resign(path, ones);
    for (const auto& e : flat.edges()) CHECK_FALSE(e.negative());

    auto r = check_resign_preserves_circuits(9, 1000);
    CHECK_MESSAGE(r.passed(), r.first_failure);
}

TEST_CASE("cylinder flips on generated instances") {
    auto r = check_cylinder_flips(3, 100, 20);
    CHECK_MESSAGE(r.passed(), r.first_failure);
    CHECK(r.trials == 120);

    Rng rng(17);
    for (bool degenerate : {false, true}) {
        for (int t = 0; t < 10; ++t) {
            auto inst = random_cylinder_instance(rng, degenerate);
            if (degenerate) CHECK(inst.split.s1 == inst.split.t1);
            auto out = cylinder_flip_detailed(inst.graph, inst.split);
            CHECK(out.flipped_side != 0);
            CHECK(verify_flip(inst.graph, out.graph));
            auto back = cylinder_flip(out.graph, out.inverse_split);
            CHECK(switching_isomorphic(back, inst.graph));
        }
    }
}

TEST_CASE("a flip connects two representations of the same matroid") {
    auto reps = sgm::testing::load_reps("matroid_b_reps.txt");
    REQUIRE(reps.size() >= 2);
    auto g = from_representation(reps[0]);
    auto h = from_representation(reps[1]);
    CHECK_FALSE(switching_isomorphic(g, h));
    auto splits = find_cylinder_splits(g);
    REQUIRE_FALSE(splits.empty());
    bool reached = false;
    for (const auto& s : splits) {
        auto f = cylinder_flip(g, s);
        CHECK(verify_flip(g, f));
        reached = reached || switching_isomorphic(f, h);
    }
    CHECK(reached);
}

TEST_CASE("split validation") {
    SignedGraph two({"a", "b", "c", "d", "e", "f"});
    two.add_edge("1", "a", "b", Sign::positive);
    two.add_edge("2", "b", "c", Sign::positive);
    two.add_edge("3", "c", "a", Sign::negative);
    two.add_edge("4", "d", "e", Sign::positive);
    two.add_edge("5", "e", "f", Sign::positive);
    two.add_edge("6", "f", "d", Sign::negative);
    CylinderSplit bad{"a", "b", "d", "e", {}, {}};
    for (const auto& e : two.edges()) bad.side[e.label] = e.label < "4" ? 1 : 2;
    CHECK_THROWS_WITH_AS(cylinder_flip(two, bad), doctest::Contains("blocking"), InvalidSplit);
    CylinderSplit missing = bad;
    missing.t2 = "zz";
    CHECK_THROWS_AS(cylinder_flip(two, missing), InvalidSplit);
}

TEST_CASE("flip verification") {
    auto pos = triangle(Sign::positive);
    CHECK(verify_flip(pos, resign(pos, {"b"})));
    CHECK_FALSE(verify_flip(pos, triangle(Sign::negative)));
    SignedGraph other({"a", "b", "c"});
    other.add_edge("x", "a", "b", Sign::positive);
    other.add_edge("y", "b", "c", Sign::positive);
    other.add_edge("w", "c", "a", Sign::positive);
    CHECK_THROWS_AS(verify_flip(pos, other), LabelMismatch);
}

TEST_CASE("switching isomorphism") {
    auto g = triangle(Sign::negative);
    SignedGraph relabelled({"q", "r", "s"});
    relabelled.add_edge("x", "r", "s", Sign::negative);
    relabelled.add_edge("y", "s", "q", Sign::positive);
    relabelled.add_edge("z", "q", "r", Sign::positive);
    CHECK(switching_isomorphic(g, relabelled));
    CHECK_FALSE(switching_isomorphic(g, triangle(Sign::positive)));
}

TEST_CASE("json and dot output") {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        auto g = random_signed_graph(rng);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    auto g = graph_from_json(R"({"vertices": ["a", "b"],
        "edges": [{"label": "e", "ends": ["a", "b"], "sign": "-"}]})");
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0].negative());
    CHECK_THROWS_AS(graph_from_json("{\"vertices\": [\"a\"], \"edges\": [{\"label\": \"e\"}]}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("not json"), ParseError);

    auto dot = graph_to_dot(triangle(Sign::negative), "T");
    CHECK(dot.find("graph \"T\"") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);

    auto inst = random_cylinder_instance(rng, true);
    auto s = split_from_json(split_to_json(inst.split));
    CHECK(s.s1 == inst.split.s1);
    CHECK(s.t2 == inst.split.t2);
    CHECK(s.side == inst.split.side);
    CHECK(s.roles == inst.split.roles);
    auto bare = split_from_json(R"({"s1": "a", "s2": "b", "t1": "c", "t2": "d"})");
    CHECK(bare.side.empty());
}
