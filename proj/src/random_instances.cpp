#include "sgm/random_instances.hpp"

#include "sgm/linalg.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Edge oriented_edge(Rng& rng, std::string label, std::size_t u, std::size_t v, Sign sign) {
    Edge e;
    e.label = std::move(label);
    e.u = u;
    e.v = v;
    e.sign = sign;
    if (u == v) {
        e.dir_u = e.dir_v = -1;
    } else {
        e.dir_u = coin(rng) ? 1 : -1;
        e.dir_v = sign == Sign::negative ? e.dir_u : -e.dir_u;
    }
    return e;
}

// Random connected simple-ish positive graph on the given vertex indices:
// a random spanning tree plus extra edges.
std::vector<std::pair<std::size_t, std::size_t>> connected_edges(Rng& rng, const std::vector<std::size_t>& vs,
                                                                 std::size_t extra) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i < vs.size(); ++i) out.push_back({vs[pick(rng, 0, i - 1)], vs[i]});
    for (std::size_t k = 0; k < extra; ++k) {
        std::size_t a = pick(rng, 0, vs.size() - 1), b = pick(rng, 0, vs.size() - 1);
        if (a != b) out.push_back({vs[a], vs[b]});
    }
    return out;
}

}  // namespace

SignedGraph random_signed_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
    const std::size_t n = pick(rng, 1, max_vertices);
    const std::size_t m = pick(rng, 0, max_edges);
    SignedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v + 1));
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t u = pick(rng, 0, n - 1);
        std::size_t v = coin(rng, 0.15) ? u : pick(rng, 0, n - 1);
        Sign s = coin(rng) ? Sign::negative : Sign::positive;
        g.add_edge(oriented_edge(rng, "e" + std::to_string(k + 1), u, v, s));
    }
    return g;
}

std::vector<std::string> random_vertex_subset(Rng& rng, const SignedGraph& g) {
    std::vector<std::string> s;
    for (const auto& v : g.vertices()) {
        if (coin(rng)) s.push_back(v);
    }
    return s;
}

CylinderInstance random_cylinder_instance(Rng& rng, bool degenerate) {
    // Glued vertex layout: cut vertices first, then H1 interior, then H2
    // interior. In the degenerate case t1 is merged into s1.
    const std::size_t n1 = pick(rng, 1, 3), n2 = pick(rng, 1, 3);
    SignedGraph g;
    std::size_t s1 = g.add_vertex("s1");
    std::size_t s2 = g.add_vertex("s2");
    std::size_t t1 = degenerate ? s1 : g.add_vertex("t1");
    std::size_t t2 = g.add_vertex("t2");
    std::vector<std::size_t> h1{s1, s2, t2}, inner1, inner2;
    if (!degenerate) h1.push_back(t1);
    for (std::size_t i = 0; i < n1; ++i) inner1.push_back(g.add_vertex("a" + std::to_string(i + 1)));
    for (std::size_t i = 0; i < n2; ++i) inner2.push_back(g.add_vertex("b" + std::to_string(i + 1)));
    h1.insert(h1.end(), inner1.begin(), inner1.end());

    CylinderInstance inst;
    inst.split.s1 = "s1";
    inst.split.s2 = "s2";
    inst.split.t1 = degenerate ? "s1" : "t1";
    inst.split.t2 = "t2";
    std::size_t label = 0;
    auto next_label = [&] { return "e" + std::to_string(++label); };

    for (auto [u, v] : connected_edges(rng, h1, pick(rng, 0, 3))) {
        std::string l = next_label();
        g.add_edge(oriented_edge(rng, l, u, v, Sign::positive));
        inst.split.side[l] = 1;
    }

    // H2 has its own copies of the four cut vertices (indices 0..3 in the
    // local numbering below) followed by its interior.
    const CutRole copy_role[4] = {CutRole::s1, CutRole::s2, CutRole::t1, CutRole::t2};
    const std::size_t copy_vertex[4] = {s1, s2, t1, t2};
    std::vector<std::size_t> local{0, 1, 2, 3};
    for (std::size_t i = 0; i < n2; ++i) local.push_back(4 + i);
    auto glued = [&](std::size_t x) { return x < 4 ? copy_vertex[x] : inner2[x - 4]; };
    auto is_t = [](std::size_t x) { return x == 2 || x == 3; };
    auto h2 = connected_edges(rng, local, pick(rng, 0, 4));
    for (auto [a, b] : h2) {
        std::string l = next_label();
        Sign s = (is_t(a) != is_t(b)) ? Sign::negative : Sign::positive;
        g.add_edge(oriented_edge(rng, l, glued(a), glued(b), s));
        inst.split.side[l] = 2;
        if (a < 4) inst.split.roles[{l, 0}] = copy_role[a];
        if (b < 4) inst.split.roles[{l, 1}] = copy_role[b];
    }
    inst.graph = resign(g, random_vertex_subset(rng, g));
    return inst;
}

DyadicMatrix random_weak_dyadic(Rng& rng, std::size_t r, std::size_t n) {
    static const long long num[] = {0, 1, -1, 2, -2, 1, -1};
    static const long long ex[] = {0, 0, 0, 0, 0, -1, -1};
    for (;;) {
        DyadicMatrix m(r, n);
        for (std::size_t i = 0; i < r; ++i) m(i, i) = Dyadic(1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = r; j < n; ++j) {
                // Zero with probability about one third.
                if (coin(rng, 0.35)) continue;
                std::size_t k = pick(rng, 1, 6);
                m(i, j) = Dyadic(BigInt(num[k]), ex[k]);
            }
        }
        if (is_weak_dyadic(m)) return m;
    }
}

Gf3Matrix random_signed_graphic_rep(Rng& rng, std::size_t vertices, std::size_t edges) {
    std::vector<std::size_t> vs(vertices);
    for (std::size_t i = 0; i < vertices; ++i) vs[i] = i;
    SignedGraph g;
    for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v + 1));
    auto links = connected_edges(rng, vs, 0);
    while (links.size() < edges) {
        std::size_t a = pick(rng, 0, vertices - 1), b = pick(rng, 0, vertices - 1);
        if (a != b) links.push_back({a, b});
    }
    std::size_t label = 0;
    for (auto [u, v] : links) {
        Sign s = coin(rng) ? Sign::negative : Sign::positive;
        g.add_edge(oriented_edge(rng, "e" + std::to_string(++label), u, v, s));
    }
    LinearMatroid m(incidence_matrix(g));
    return std::get<Gf3Matrix>(standard_form(m));
}

DyadicMatrix random_row_column_scaling(Rng& rng, const DyadicMatrix& m) {
    DyadicMatrix out = m;
    auto factor = [&] {
        Dyadic f = Dyadic::pow2(static_cast<long long>(pick(rng, 0, 6)) - 3);
        return coin(rng) ? -f : f;
    };
    for (std::size_t i = 0; i < out.rows(); ++i) out.scale_row(i, factor());
    for (std::size_t j = 0; j < out.cols(); ++j) out.scale_column(j, factor());
    // Restore columns that were unit vectors.
    for (std::size_t j = 0; j < out.cols(); ++j) {
        if (m.nonzeros_in_column(j) != 1) continue;
        for (std::size_t i = 0; i < out.rows(); ++i) {
            if (m(i, j) == Dyadic(1)) out.scale_column(j, out(i, j).inverse());
        }
    }
    return out;
}

}  // namespace sgm
