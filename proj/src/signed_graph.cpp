#include "sgm/signed_graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "sgm/combinatorics.hpp"

namespace sgm {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void check_directions(const Edge& e) {
    auto ok = [](int d) { return d == 1 || d == -1; };
    if (!ok(e.dir_u) || !ok(e.dir_v)) throw Error("edge '" + e.label + "' has a direction other than +-1");
    if (!e.is_loop() && (e.dir_u == e.dir_v) != e.negative()) {
        throw Error("edge '" + e.label + "' has directions inconsistent with its sign");
    }
}

// Potential over an explicit edge list; odd[i] says edge i needs unequal
// potentials at its ends. Loops with odd parity make the system unsolvable.
std::optional<std::vector<int>> solve_parity(std::size_t n, const std::vector<Edge>& edges,
                                             const std::vector<bool>& odd) {
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.is_loop()) {
            if (odd[i]) return std::nullopt;
            continue;
        }
        adj[e.u].push_back({e.v, odd[i] ? 1 : 0});
        adj[e.v].push_back({e.u, odd[i] ? 1 : 0});
    }
    std::vector<int> pot(n, -1);
    for (std::size_t root = 0; root < n; ++root) {
        if (pot[root] != -1) continue;
        pot[root] = 0;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            for (auto [y, par] : adj[x]) {
                int want = pot[x] ^ par;
                if (pot[y] == -1) {
                    pot[y] = want;
                    q.push(y);
                } else if (pot[y] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return pot;
}

bool sign_product_negative(const SignedGraph& g, const std::vector<std::size_t>& edge_ids) {
    bool neg = false;
    for (auto i : edge_ids) neg ^= g.edges()[i].negative();
    return neg;
}

// Groups edges into pieces connected through vertices other than those in
// blocked; each loop at a blocked vertex or edge between blocked vertices is
// its own piece.
std::vector<std::vector<std::size_t>> edge_pieces(const SignedGraph& g, const std::vector<std::size_t>& ids,
                                                  const std::vector<bool>& blocked) {
    UnionFind uf(ids.size());
    std::map<std::size_t, std::size_t> first_at;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const Edge& e = g.edges()[ids[k]];
        for (std::size_t w : {e.u, e.v}) {
            if (blocked[w]) continue;
            auto [it, fresh] = first_at.emplace(w, k);
            if (!fresh) uf.unite(k, it->second);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < ids.size(); ++k) groups[uf.find(k)].push_back(ids[k]);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

bool is_circuit(const SignedGraph& g, Mask x) {
    const auto ids = mask_to_indices(x);
    const std::size_t nv_total = g.vertex_count();
    std::vector<int> deg(nv_total, 0);
    UnionFind uf(nv_total);
    for (auto i : ids) {
        const Edge& e = g.edges()[i];
        deg[e.u] += 1;
        deg[e.v] += 1;
        uf.unite(e.u, e.v);
    }
    std::size_t nv = 0, deg3 = 0, deg4 = 0, centre = 0;
    std::optional<std::size_t> comp;
    for (std::size_t v = 0; v < nv_total; ++v) {
        if (deg[v] == 0) continue;
        ++nv;
        if (!comp) comp = uf.find(v);
        if (uf.find(v) != *comp) return false;
        if (deg[v] == 2) continue;
        if (deg[v] == 3) {
            ++deg3;
        } else if (deg[v] == 4) {
            ++deg4;
            centre = v;
        } else {
            return false;
        }
    }
    const std::size_t ne = ids.size();
    if (ne == nv) return deg3 == 0 && deg4 == 0 && !sign_product_negative(g, ids);
    if (ne != nv + 1) return false;

    if (deg4 == 1 && deg3 == 0) {
        std::vector<bool> blocked(nv_total, false);
        blocked[centre] = true;
        auto petals = edge_pieces(g, ids, blocked);
        if (petals.size() != 2) return false;
        return sign_product_negative(g, petals[0]) && sign_product_negative(g, petals[1]);
    }
    if (deg3 != 2 || deg4 != 0) return false;

    // Handcuff or theta: a handcuff has a bridge path between its cycles.
    std::vector<std::size_t> cycle_edges;
    bool has_bridge = false;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const Edge& e = g.edges()[ids[k]];
        bool bridge = false;
        if (!e.is_loop()) {
            UnionFind rest(nv_total);
            for (std::size_t k2 = 0; k2 < ids.size(); ++k2) {
                if (k2 == k) continue;
                const Edge& f = g.edges()[ids[k2]];
                rest.unite(f.u, f.v);
            }
            bridge = rest.find(e.u) != rest.find(e.v);
        }
        if (bridge) {
            has_bridge = true;
        } else {
            cycle_edges.push_back(ids[k]);
        }
    }
    if (!has_bridge) return false;
    auto cycles = edge_pieces(g, cycle_edges, std::vector<bool>(nv_total, false));
    if (cycles.size() != 2) return false;
    return sign_product_negative(g, cycles[0]) && sign_product_negative(g, cycles[1]);
}

}  // namespace

SignedGraph::SignedGraph(std::vector<std::string> vertex_labels) {
    for (const auto& v : vertex_labels) add_vertex(v);
}

std::size_t SignedGraph::add_vertex(const std::string& label) {
    if (has_vertex(label)) throw Error("duplicate vertex label '" + label + "'");
    vertices_.push_back(label);
    return vertices_.size() - 1;
}

std::size_t SignedGraph::add_edge(const std::string& label, const std::string& u, const std::string& v,
                                  Sign sign) {
    Edge e;
    e.label = label;
    e.u = vertex_index(u);
    e.v = vertex_index(v);
    e.sign = sign;
    if (e.is_loop()) {
        e.dir_u = e.dir_v = -1;
    } else if (sign == Sign::negative) {
        e.dir_u = e.dir_v = 1;
    }
    return add_edge(std::move(e));
}

std::size_t SignedGraph::add_edge(Edge e) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
        throw UnknownElement("edge '" + e.label + "' has an endpoint outside the vertex set");
    }
    for (const auto& f : edges_) {
        if (f.label == e.label) throw Error("duplicate edge label '" + e.label + "'");
    }
    check_directions(e);
    edges_.push_back(std::move(e));
    return edges_.size() - 1;
}

std::vector<std::string> SignedGraph::edge_labels() const {
    std::vector<std::string> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
}

std::size_t SignedGraph::vertex_index(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) throw UnknownElement("unknown vertex '" + label + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t SignedGraph::edge_index(const std::string& label) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].label == label) return i;
    }
    throw UnknownElement("unknown edge '" + label + "'");
}

bool SignedGraph::has_vertex(const std::string& label) const {
    return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

Gf3Matrix incidence_matrix(const SignedGraph& g) {
    Gf3Matrix m(g.vertex_count(), g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        if (e.is_loop()) {
            if (e.negative()) m(e.u, j) = Gf3(-1);
        } else {
            m(e.u, j) = Gf3(e.dir_u);
            m(e.v, j) = Gf3(e.dir_v);
        }
    }
    if (g.edge_count() > 0) m.set_col_labels(g.edge_labels());
    return m;
}

SignedGraph from_representation(const Gf3Matrix& a, const std::vector<std::string>& vertex_labels) {
    if (vertex_labels.size() != a.rows()) throw Error("vertex label count does not match row count");
    SignedGraph g(vertex_labels);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!a(i, j).is_zero()) nz.push_back(i);
        }
        Edge e;
        e.label = a.col_labels()[j];
        if (nz.size() > 2) {
            throw TooManyNonzeros("column '" + e.label + "' has " + std::to_string(nz.size()) + " nonzeros");
        }
        if (nz.empty()) {
            if (a.rows() == 0) throw Error("a zero column needs at least one vertex");
            e.u = e.v = 0;
            e.sign = Sign::positive;
            e.dir_u = e.dir_v = -1;
        } else if (nz.size() == 1) {
            e.u = e.v = nz[0];
            e.sign = Sign::negative;
            e.dir_u = e.dir_v = a(nz[0], j).to_int();
        } else {
            e.u = nz[0];
            e.v = nz[1];
            e.dir_u = a(nz[0], j).to_int();
            e.dir_v = a(nz[1], j).to_int();
            e.sign = e.dir_u == e.dir_v ? Sign::negative : Sign::positive;
        }
        g.add_edge(std::move(e));
    }
    return g;
}

SignedGraph from_representation(const SgRepresentation& rep) {
    return from_representation(rep.matrix, rep.vertex_labels);
}

LinearMatroid graph_matroid(const SignedGraph& g) { return LinearMatroid(incidence_matrix(g)); }

SubsetFamily circuits_sg(const SignedGraph& g) {
    const std::size_t m = g.edge_count();
    if (m > 24) throw Error("circuits_sg supports at most 24 edges");
    std::vector<Mask> found;
    for (Mask x = 1; x < (Mask{1} << m); ++x) {
        if (is_circuit(g, x)) found.push_back(x);
    }
    // Order like the matroid family: lexicographic on sorted positions.
    std::vector<std::vector<std::size_t>> pos;
    pos.reserve(found.size());
    for (Mask x : found) pos.push_back(mask_to_indices(x));
    std::sort(pos.begin(), pos.end());
    SubsetFamily f;
    for (const auto& p : pos) {
        std::vector<std::string> s;
        for (auto i : p) s.push_back(g.edges()[i].label);
        f.member_sets.push_back(std::move(s));
    }
    return f;
}

SubsetFamily label_sorted(const SubsetFamily& f) {
    SubsetFamily out = f;
    for (auto& s : out.member_sets) std::sort(s.begin(), s.end());
    std::sort(out.member_sets.begin(), out.member_sets.end());
    return out;
}

std::optional<std::vector<int>> balancing_potential(const SignedGraph& g) {
    std::vector<bool> odd;
    odd.reserve(g.edge_count());
    for (const auto& e : g.edges()) odd.push_back(e.negative());
    return solve_parity(g.vertex_count(), g.edges(), odd);
}

bool is_balanced(const SignedGraph& g) { return balancing_potential(g).has_value(); }

SignedGraph delete_vertices(const SignedGraph& g, const std::vector<std::string>& doomed) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (const auto& d : doomed) gone[g.vertex_index(d)] = true;
    SignedGraph out;
    std::vector<std::size_t> remap(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!gone[v]) remap[v] = out.add_vertex(g.vertices()[v]);
    }
    for (Edge e : g.edges()) {
        if (gone[e.u] || gone[e.v]) continue;
        e.u = remap[e.u];
        e.v = remap[e.v];
        out.add_edge(std::move(e));
    }
    return out;
}

bool is_blocking_pair(const SignedGraph& g, const std::string& u, const std::string& v) {
    return is_balanced(delete_vertices(g, u == v ? std::vector<std::string>{u} : std::vector<std::string>{u, v}));
}

SignedGraph resign(const SignedGraph& g, const std::vector<std::string>& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (const auto& x : s) in[g.vertex_index(x)] = true;
    SignedGraph out = g;
    for (Edge& e : out.mutable_edges()) {
        if (e.is_loop() || in[e.u] == in[e.v]) continue;
        if (in[e.u]) {
            e.dir_u = -e.dir_u;
        } else {
            e.dir_v = -e.dir_v;
        }
        e.sign = !e.sign;
    }
    return out;
}

namespace {

struct FlipPlan {
    std::vector<std::size_t> cut;  // vertex index per role, in CutRole order
    std::vector<int> side;         // per edge
    std::vector<std::array<std::optional<CutRole>, 2>> roles;  // per edge end
};

FlipPlan validate_split(const SignedGraph& g, const CylinderSplit& split) {
    FlipPlan plan;
    const std::string* names[4] = {&split.s1, &split.s2, &split.t1, &split.t2};
    for (const auto* name : names) {
        if (!g.has_vertex(*name)) throw InvalidSplit("cut vertex '" + *name + "' is not in the graph");
        plan.cut.push_back(g.vertex_index(*name));
    }
    if (!is_blocking_pair(g, split.s1, split.s2)) throw InvalidSplit("{s1, s2} is not a blocking pair");
    if (!is_blocking_pair(g, split.t1, split.t2)) throw InvalidSplit("{t1, t2} is not a blocking pair");

    auto cut_role_of = [&](std::size_t v) -> std::optional<CutRole> {
        for (int r = 0; r < 4; ++r) {
            if (plan.cut[r] == v) return static_cast<CutRole>(r);
        }
        return std::nullopt;
    };
    for (const auto& [key, role] : split.roles) {
        std::size_t e = g.edge_index(key.first);
        if (key.second != 0 && key.second != 1) throw InvalidSplit("edge end index must be 0 or 1");
        const Edge& edge = g.edges()[e];
        std::size_t v = key.second == 0 ? edge.u : edge.v;
        if (plan.cut[static_cast<int>(role)] != v) {
            throw InvalidSplit("role given for an end of '" + key.first + "' does not match its vertex");
        }
    }

    std::vector<int> vertex_side(g.vertex_count(), 0);
    int count[3] = {0, 0, 0};
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        auto it = split.side.find(e.label);
        if (it == split.side.end() || (it->second != 1 && it->second != 2)) {
            throw InvalidSplit("edge '" + e.label + "' is not assigned to side 1 or 2");
        }
        int s = it->second;
        plan.side.push_back(s);
        ++count[s];
        std::array<std::optional<CutRole>, 2> ends;
        for (int k = 0; k < 2; ++k) {
            std::size_t v = k == 0 ? e.u : e.v;
            auto ov = split.roles.find({e.label, k});
            ends[k] = ov != split.roles.end() ? std::optional<CutRole>(ov->second) : cut_role_of(v);
            if (ends[k]) continue;
            if (vertex_side[v] != 0 && vertex_side[v] != s) {
                throw InvalidSplit("vertex '" + g.vertices()[v] + "' outside the cut touches both sides");
            }
            vertex_side[v] = s;
        }
        plan.roles.push_back(ends);
    }
    if (count[1] == 0 || count[2] == 0) throw InvalidSplit("each side needs at least one edge");
    return plan;
}

bool in_pair(std::optional<CutRole> r, bool t_pair) {
    if (!r) return false;
    bool is_t = *r == CutRole::t1 || *r == CutRole::t2;
    return is_t == t_pair;
}

CutRole mirror(CutRole r) {
    switch (r) {
        case CutRole::s1: return CutRole::s2;
        case CutRole::s2: return CutRole::s1;
        case CutRole::t1: return CutRole::t2;
        default: return CutRole::t1;
    }
}

}  // namespace

namespace {

FlipOutcome flip_impl(const SignedGraph& g, const CylinderSplit& split) {
    FlipPlan plan = validate_split(g, split);
    for (int j : {2, 1}) {
        for (bool t_pair : {true, false}) {
            // Target negative set: side-j edges with exactly one end attached
            // through the chosen pair.
            std::vector<bool> target(g.edge_count(), false), odd(g.edge_count(), false);
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                if (plan.side[i] != j) continue;
                int hits = in_pair(plan.roles[i][0], t_pair) + in_pair(plan.roles[i][1], t_pair);
                target[i] = hits == 1;
            }
            for (std::size_t i = 0; i < g.edge_count(); ++i) odd[i] = g.edges()[i].negative() != target[i];
            auto pot = solve_parity(g.vertex_count(), g.edges(), odd);
            if (!pot) continue;
            std::vector<std::string> s;
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                if ((*pot)[v]) s.push_back(g.vertices()[v]);
            }
            FlipOutcome res{resign(g, s), j, split};
            res.inverse_split.roles.clear();
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                Edge& e = res.graph.mutable_edges()[i];
                for (int k = 0; k < 2; ++k) {
                    auto role = plan.roles[i][k];
                    if (!role) continue;
                    if (plan.side[i] == j) {
                        role = mirror(*role);
                        (k == 0 ? e.u : e.v) = plan.cut[static_cast<int>(*role)];
                    }
                    res.inverse_split.roles[{e.label, k}] = *role;
                }
                // Remapping can turn a loop into a link or back; keep the
                // end directions consistent with the unchanged sign.
                if (e.is_loop()) {
                    e.dir_u = e.dir_v = -1;
                } else if (e.negative() != (e.dir_u == e.dir_v)) {
                    e.dir_v = e.negative() ? e.dir_u : -e.dir_u;
                }
            }
            return res;
        }
    }
    throw InvalidSplit("no resigning confines the negative edges to one side at t1/t2 or s1/s2");
}

}  // namespace

SignedGraph cylinder_flip(const SignedGraph& g, const CylinderSplit& split) { return flip_impl(g, split).graph; }

FlipOutcome cylinder_flip_detailed(const SignedGraph& g, const CylinderSplit& split) { return flip_impl(g, split); }

bool verify_flip(const SignedGraph& g, const SignedGraph& g2) {
    auto a = g.edge_labels(), b = g2.edge_labels();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw LabelMismatch("graphs have different edge labels");
    return label_sorted(circuits_sg(g)) == label_sorted(circuits_sg(g2));
}

namespace {

// Tries every two-colouring of the pieces left after removing the cut (piece
// 0 stays on side 1) and, when s1 and t1 coincide, every s/t role choice for
// the ends at the shared vertex.
void collect_splits(const SignedGraph& g, std::size_t s1, std::size_t s2, std::size_t t1, std::size_t t2,
                    std::vector<CylinderSplit>& out) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> blocked(n, false);
    blocked[s1] = blocked[s2] = blocked[t1] = blocked[t2] = true;
    std::vector<std::size_t> all(g.edge_count());
    std::iota(all.begin(), all.end(), 0);
    auto pieces = edge_pieces(g, all, blocked);
    if (pieces.size() < 2 || pieces.size() > 16) return;
    std::vector<std::pair<std::string, int>> shared_ends;
    if (s1 == t1) {
        for (const Edge& e : g.edges()) {
            if (e.u == s1) shared_ends.push_back({e.label, 0});
            if (e.v == s1) shared_ends.push_back({e.label, 1});
        }
        if (shared_ends.size() > 10) return;
    }
    for (Mask colour = 1; colour < (Mask{1} << (pieces.size() - 1)); ++colour) {
        for (Mask roles = 0; roles < (Mask{1} << shared_ends.size()); ++roles) {
            CylinderSplit split{g.vertices()[s1], g.vertices()[s2], g.vertices()[t1], g.vertices()[t2], {}, {}};
            for (std::size_t k = 0; k < pieces.size(); ++k) {
                int side = (k > 0 && (colour >> (k - 1)) & 1) ? 2 : 1;
                for (auto e : pieces[k]) split.side[g.edges()[e].label] = side;
            }
            for (std::size_t k = 0; k < shared_ends.size(); ++k) {
                split.roles[shared_ends[k]] = (roles >> k) & 1 ? CutRole::t1 : CutRole::s1;
            }
            try {
                flip_impl(g, split);
                out.push_back(std::move(split));
            } catch (const InvalidSplit&) {
            }
        }
    }
}

}  // namespace

std::vector<CylinderSplit> find_cylinder_splits(const SignedGraph& g, bool include_degenerate) {
    const std::size_t n = g.vertex_count();
    std::vector<CylinderSplit> out;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b});
    std::vector<bool> blocking(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        blocking[p] = is_blocking_pair(g, g.vertices()[pairs[p].first], g.vertices()[pairs[p].second]);
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!blocking[p]) continue;
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            if (!blocking[q]) continue;
            auto [a, b] = pairs[p];
            auto [c, d] = pairs[q];
            std::set<std::size_t> distinct{a, b, c, d};
            if (distinct.size() == 4) {
                collect_splits(g, a, b, c, d, out);
            } else if (include_degenerate && distinct.size() == 3) {
                // Put the shared vertex in the s1 = t1 position.
                std::size_t shared = (a == c || a == d) ? a : b;
                std::size_t s2 = shared == a ? b : a;
                std::size_t t2 = shared == c ? d : c;
                collect_splits(g, shared, s2, shared, t2, out);
            }
        }
    }
    return out;
}

bool switching_isomorphic(const SignedGraph& g, const SignedGraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<std::size_t> partner(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        try {
            partner[i] = h.edge_index(g.edges()[i].label);
        } catch (const UnknownElement&) {
            return false;
        }
        if (g.edges()[i].is_loop() != h.edges()[partner[i]].is_loop()) return false;
        if (g.edges()[i].is_loop() && g.edges()[i].sign != h.edges()[partner[i]].sign) return false;
    }
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> phi(n, n);
    std::vector<bool> used(n, false);
    // Edges whose endpoints are both assigned once vertex v is placed.
    std::vector<std::vector<std::size_t>> closing(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        closing[std::max(e.u, e.v)].push_back(i);
    }
    auto consistent = [&](std::size_t v) {
        for (auto i : closing[v]) {
            const Edge& e = g.edges()[i];
            const Edge& f = h.edges()[partner[i]];
            std::size_t a = phi[e.u], b = phi[e.v];
            if (!((a == f.u && b == f.v) || (a == f.v && b == f.u))) return false;
        }
        return true;
    };
    auto signatures_match = [&]() {
        std::vector<Edge> mapped;
        std::vector<bool> odd;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            Edge e = g.edges()[i];
            e.u = phi[e.u];
            e.v = phi[e.v];
            mapped.push_back(e);
            odd.push_back(e.negative() != h.edges()[partner[i]].negative());
        }
        return solve_parity(n, mapped, odd).has_value();
    };
    std::function<bool(std::size_t)> place = [&](std::size_t v) -> bool {
        if (v == n) return signatures_match();
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w]) continue;
            phi[v] = w;
            used[w] = true;
            if (consistent(v) && place(v + 1)) return true;
            used[w] = false;
        }
        phi[v] = n;
        return false;
    };
    return place(0);
}

}  // namespace sgm
