#include "sgm/sg_enum.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <sstream>

#include "sgm/linalg.hpp"
#include "sgm/matrix_io.hpp"

namespace sgm {

bool satisfies_property1(const Gf3Matrix& a, std::size_t n_rows) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::size_t top = 0;
        for (std::size_t i = 0; i < n_rows && i < a.rows(); ++i) top += !a(i, j).is_zero();
        if (top <= 2) continue;
        bool below = false;
        for (std::size_t i = n_rows; i < a.rows() && !below; ++i) below = !a(i, j).is_zero();
        if (!below) return false;
    }
    return true;
}

Gf3Matrix SearchState::element_block() const {
    std::vector<std::size_t> idx;
    for (std::size_t j = next_row; j < R.cols(); ++j) idx.push_back(j);
    return R.select_columns(idx);
}

Gf3Matrix gf3_rep(const LinearMatroid& m) {
    return std::visit(
        [](const auto& a) -> Gf3Matrix {
            using M = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<M, Gf3Matrix>) {
                return a;
            } else {
                return project_mod3(a);
            }
        },
        m.rep());
}

namespace {

std::vector<std::string> vertex_names(std::size_t r) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= r; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

std::vector<std::vector<Gf3>> projective_points(std::size_t r) {
    std::vector<std::vector<Gf3>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        std::vector<Gf3> v(r);
        std::size_t c = code;
        for (std::size_t i = r; i-- > 0;) {
            v[i] = Gf3(static_cast<int>(c % 3));
            c /= 3;
        }
        auto first = std::find_if(v.begin(), v.end(), [](Gf3 x) { return !x.is_zero(); });
        if (first->residue() == 1) out.push_back(std::move(v));
    }
    return out;  // base-3 counting order is lexicographic on residues
}

constexpr std::size_t kMaxRows = 12;
using Col = std::array<std::uint8_t, kMaxRows>;

// Compact search node: R holds the chosen basis columns followed by the
// element columns, X the remaining candidates; entries are GF(3) residues.
struct Node {
    std::size_t k = 0;
    std::vector<Col> R;
    std::vector<Col> X;
    // Original projective point behind each X column, and the points chosen
    // so far (sorted).
    std::vector<std::uint32_t> x_ids;
    std::vector<std::uint32_t> chosen_ids;
};

struct Support {
    std::size_t above = 0;
    std::size_t below = 0;
    std::size_t first_below = 0;
};

Support support(const Col& c, std::size_t k, std::size_t r) {
    Support sup;
    bool seen = false;
    for (std::size_t i = 0; i < r; ++i) {
        if (!c[i]) continue;
        if (i < k) {
            ++sup.above;
        } else {
            if (!seen) sup.first_below = i;
            seen = true;
            ++sup.below;
        }
    }
    return sup;
}

// Pivot on entry s of column x (p = x[s]) and move row s to row k.
inline void pivot_column(Col& v, const Col& x, std::size_t s, std::size_t k, std::size_t r) {
    const std::uint8_t p = x[s];
    const std::uint8_t t = static_cast<std::uint8_t>(v[s] * p % 3);
    if (t) {
        for (std::size_t i = 0; i < r; ++i) {
            if (i == s || !x[i]) continue;
            v[i] = static_cast<std::uint8_t>((v[i] + 3 * 3 - t * x[i]) % 3);
        }
        v[s] = t;
    }
    std::swap(v[s], v[k]);
}

bool property1(const std::vector<Col>& R, std::size_t first_element, std::size_t n_rows, std::size_t r) {
    for (std::size_t j = first_element; j < R.size(); ++j) {
        const Col& c = R[j];
        std::size_t top = 0;
        for (std::size_t i = 0; i < n_rows; ++i) top += c[i] != 0;
        if (top <= 2) continue;
        bool below = false;
        for (std::size_t i = n_rows; i < r && !below; ++i) below = c[i] != 0;
        if (!below) return false;
    }
    return true;
}

// Each step adds one processed row and rewrites at most one earlier processed
// row, so a column's nonzero count over processed rows never decreases.
bool processed_at_most_two(const std::vector<Col>& R, std::size_t k) {
    for (std::size_t j = k; j < R.size(); ++j) {
        std::size_t top = 0;
        for (std::size_t i = 0; i < k; ++i) top += R[j][i] != 0;
        if (top > 2) return false;
    }
    return true;
}

// Inserts candidate pool[x] as basis column k, pivots via row s, prunes by
// the three-nonzero condition and drops candidates with nothing below the new row.
std::optional<Node> advance(const Node& in, const std::vector<Col>& pool,
                            const std::vector<std::uint32_t>& ids, std::size_t x, std::size_t s,
                            std::size_t r, SearchOptions opt) {
    const std::size_t k = in.k;
    const Col xc = pool[x];
    Node out;
    out.k = k + 1;
    out.chosen_ids = in.chosen_ids;
    if (!ids.empty()) {
        out.chosen_ids.insert(std::upper_bound(out.chosen_ids.begin(), out.chosen_ids.end(), ids[x]), ids[x]);
    }
    out.R.reserve(in.R.size() + 1);
    for (std::size_t j = 0; j < k; ++j) out.R.push_back(in.R[j]);
    out.R.push_back(xc);
    for (std::size_t j = k; j < in.R.size(); ++j) out.R.push_back(in.R[j]);
    for (auto& c : out.R) pivot_column(c, xc, s, k, r);
    if ((opt.property1_pruning || out.k == r) && !property1(out.R, out.k, out.k, r)) return std::nullopt;
    if (opt.processed_count_pruning && !processed_at_most_two(out.R, out.k)) return std::nullopt;
    out.X.reserve(pool.size());
    for (std::size_t j = 0; j < pool.size(); ++j) {
        if (j == x) continue;
        Col c = pool[j];
        pivot_column(c, xc, s, k, r);
        bool below = false;
        for (std::size_t i = k + 1; i < r && !below; ++i) below = c[i] != 0;
        if (below) {
            out.X.push_back(c);
            if (!ids.empty()) out.x_ids.push_back(ids[j]);
        }
    }
    return out;
}

std::optional<Node> grow(const Node& n, std::size_t x, std::size_t r, SearchOptions opt) {
    return advance(n, n.X, n.x_ids, x, support(n.X[x], n.k, r).first_below, r, opt);
}

std::vector<std::optional<Node>> new_component(const Node& n, std::size_t r, SearchOptions opt,
                                               bool skip_single) {
    std::vector<Col> fresh;
    std::vector<std::uint32_t> fresh_ids;
    for (std::size_t j = 0; j < n.X.size(); ++j) {
        if (support(n.X[j], n.k, r).above != 0) continue;
        fresh.push_back(n.X[j]);
        if (!n.x_ids.empty()) fresh_ids.push_back(n.x_ids[j]);
    }
    std::vector<std::optional<Node>> out;
    for (std::size_t x = 0; x < fresh.size(); ++x) {
        Support sup = support(fresh[x], n.k, r);
        if (sup.below == 0) continue;
        if (skip_single && sup.below == 1) continue;
        out.push_back(advance(n, fresh, fresh_ids, x, sup.first_below, r, opt));
    }
    return out;
}

struct Collector {
    std::size_t r = 0;
    std::size_t n = 0;
    SearchOptions opt;
    std::set<std::vector<std::uint8_t>> found;
    std::size_t nodes = 0;

    void emit(const Node& node) {
        // Canonical key: rows scaled to lead with 1, then sorted.
        std::vector<std::vector<std::uint8_t>> rows(r, std::vector<std::uint8_t>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const Col& c = node.R[r + j];
            std::size_t nz = 0;
            for (std::size_t i = 0; i < r; ++i) {
                rows[i][j] = c[i];
                nz += c[i] != 0;
            }
            if (nz > 2) return;
        }
        for (auto& row : rows) {
            auto it = std::find_if(row.begin(), row.end(), [](std::uint8_t v) { return v != 0; });
            if (it != row.end() && *it == 2)
                for (auto& v : row) v = static_cast<std::uint8_t>((2 * v) % 3);
        }
        std::sort(rows.begin(), rows.end());
        std::vector<std::uint8_t> key;
        for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
        found.insert(std::move(key));
    }

    std::set<std::vector<std::uint32_t>> seen;

    void visit(const std::optional<Node>& child) {
        if (!child) return;
        if (opt.memoize_chosen_sets && !seen.insert(child->chosen_ids).second) return;
        if (child->k == r) {
            emit(*child);
            return;
        }
        run(*child);
    }

    void run(const Node& node) {
        ++nodes;
        for (std::size_t x = 0; x < node.X.size(); ++x) {
            Support sup = support(node.X[x], node.k, r);
            if ((sup.above == 1 || sup.above == 0) && sup.below == 1) visit(grow(node, x, r, opt));
        }
        for (const auto& child : new_component(node, r, opt, true)) visit(child);
    }
};

Node to_node(const SearchState& s) {
    const std::size_t r = s.R.rows();
    if (r > kMaxRows) throw Error("rank too large for the representation search");
    Node n;
    n.k = s.next_row;
    for (std::size_t j = 0; j < s.R.cols(); ++j) {
        Col c{};
        for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<std::uint8_t>(s.R(i, j).residue());
        n.R.push_back(c);
    }
    for (std::size_t j = 0; j < s.X.cols(); ++j) {
        Col c{};
        for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<std::uint8_t>(s.X(i, j).residue());
        n.X.push_back(c);
    }
    return n;
}

Gf3Matrix cols_to_matrix(const std::vector<Col>& cols, std::size_t r) {
    Gf3Matrix m(r, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) m(i, j) = Gf3(cols[j][i]);
    return m;
}

// Element labels survive; basis columns are labelled b1..bk.
SearchState from_node(const Node& n, const SearchState& like, Phase phase) {
    const std::size_t r = like.R.rows();
    SearchState s;
    s.next_row = n.k;
    s.phase = phase;
    s.R = cols_to_matrix(n.R, r);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < n.k; ++j) labels.push_back("b" + std::to_string(j + 1));
    const auto& old = like.R.col_labels();
    for (std::size_t j = like.next_row; j < old.size(); ++j) labels.push_back(old[j]);
    s.R.set_col_labels(labels);
    s.X = cols_to_matrix(n.X, r);
    return s;
}

}  // namespace

SearchState initial_state(const Gf3Matrix& r) {
    SearchState s;
    s.next_row = 0;
    s.R = r;
    auto pts = projective_points(r.rows());
    Gf3Matrix x(r.rows(), pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t i = 0; i < r.rows(); ++i) x(i, j) = pts[j][i];
    s.X = x;
    return s;
}

bool is_grow_candidate(const SearchState& s, std::size_t x) {
    Support sup = support(to_node(s).X.at(x), s.next_row, s.R.rows());
    return sup.above == 1 && sup.below == 1;
}

bool is_loop_candidate(const SearchState& s, std::size_t x) {
    Support sup = support(to_node(s).X.at(x), s.next_row, s.R.rows());
    return sup.above == 0 && sup.below == 1;
}

std::optional<SearchState> step_grow(const SearchState& s, std::size_t x, SearchOptions opt) {
    if (!is_grow_candidate(s, x)) throw Error("step_grow: candidate has the wrong support");
    auto next = grow(to_node(s), x, s.R.rows(), opt);
    if (!next) return std::nullopt;
    return from_node(*next, s, s.phase);
}

std::optional<SearchState> step_negative_loop(const SearchState& s, std::size_t x, SearchOptions opt) {
    if (!is_loop_candidate(s, x)) throw Error("step_negative_loop: candidate has the wrong support");
    auto next = grow(to_node(s), x, s.R.rows(), opt);
    if (!next) return std::nullopt;
    return from_node(*next, s, s.phase);
}

std::vector<std::optional<SearchState>> step_new_component(const SearchState& s, SearchOptions opt) {
    std::vector<std::optional<SearchState>> out;
    for (auto& child : new_component(to_node(s), s.R.rows(), opt, false)) {
        if (child) {
            out.push_back(from_node(*child, s, Phase::new_component));
        } else {
            out.push_back(std::nullopt);
        }
    }
    return out;
}

SgRepresentation canonical_representation(const SgRepresentation& rep) {
    const Gf3Matrix& a = rep.matrix;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<int> row(a.cols());
        Gf3 f = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (f.is_zero() && !a(i, j).is_zero()) f = a(i, j).inverse();
        }
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = (a(i, j) * f).residue();
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    Gf3Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Gf3(rows[i][j]);
    out.set_col_labels(a.col_labels());
    return SgRepresentation{out, vertex_names(a.rows())};
}

std::vector<SgRepresentation> dedup_representations(std::vector<SgRepresentation> reps) {
    std::vector<std::pair<std::vector<int>, SgRepresentation>> keyed;
    for (const auto& r : reps) {
        SgRepresentation c = canonical_representation(r);
        std::vector<int> key;
        for (const auto& x : c.matrix.data()) key.push_back(x.residue());
        keyed.emplace_back(std::move(key), std::move(c));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SgRepresentation> out;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
        out.push_back(std::move(keyed[i].second));
    }
    return out;
}

std::vector<SgRepresentation> enumerate_signed_graphic(const LinearMatroid& m, SearchOptions opt) {
    Gf3Matrix R = gf3_rep(m);
    const std::size_t r = R.rows(), n = R.cols();
    if (r == 0) return {SgRepresentation{R, {}}};
    Collector col;
    col.r = r;
    col.n = n;
    col.opt = opt;
    Node root = to_node(initial_state(R));
    for (std::uint32_t j = 0; j < root.X.size(); ++j) root.x_ids.push_back(j);
    col.run(root);
    if (opt.node_counter) *opt.node_counter = col.nodes;
    std::vector<SgRepresentation> out;
    for (const auto& key : col.found) {
        Gf3Matrix a(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Gf3(key[i * n + j]);
        a.set_col_labels(R.col_labels());
        out.push_back(SgRepresentation{a, vertex_names(r)});
    }
    return dedup_representations(std::move(out));
}

std::optional<SgRepresentation> is_signed_graphic(const ExactMatrix& a) {
    Gf3Matrix g = std::visit(
        [](const auto& x) -> Gf3Matrix {
            using M = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<M, Gf3Matrix>) {
                return x;
            } else {
                return project_mod3(x);
            }
        },
        a);
    const std::size_t r = g.rows();
    Gf3Matrix full(r, r + g.cols());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (const auto& l : g.col_labels()) labels.push_back(l);
    for (std::size_t i = 0; i < r; ++i) {
        full(i, i) = Gf3(1);
        for (std::size_t j = 0; j < g.cols(); ++j) full(i, r + j) = g(i, j);
    }
    full.set_col_labels(labels);
    auto reps = enumerate_signed_graphic(LinearMatroid(ExactMatrix(full)));
    if (reps.empty()) return std::nullopt;
    return reps.front();
}

std::vector<SgRepresentation> representations_by_row_space(const LinearMatroid& m) {
    const Gf3Matrix R = gf3_rep(m);
    const std::size_t r = R.rows(), n = R.cols();
    std::vector<SgRepresentation> out;
    if (r == 0) return {SgRepresentation{R, {}}};
    // Projective vectors of the row space, normalized and sorted.
    std::set<std::vector<int>> vecs;
    for (const auto& coef : projective_points(r)) {
        std::vector<int> v(n);
        Gf3 lead = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Gf3 s = 0;
            for (std::size_t i = 0; i < r; ++i) s += coef[i] * R(i, j);
            v[j] = s.residue();
        }
        auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (it == v.end()) continue;
        if (*it == 2)
            for (auto& x : v) x = (2 * x) % 3;
        vecs.insert(v);
        (void)lead;
    }
    std::vector<std::vector<int>> pool(vecs.begin(), vecs.end());
    std::vector<std::size_t> chosen;
    std::vector<int> count(n, 0);
    auto emit = [&] {
        Gf3Matrix a(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Gf3(pool[chosen[i]][j]);
        if (rank(a) != r) return;
        a.set_col_labels(R.col_labels());
        out.push_back(SgRepresentation{a, vertex_names(r)});
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == r) {
            emit();
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) ok = count[j] + (pool[i][j] != 0) <= 2;
            if (!ok) continue;
            for (std::size_t j = 0; j < n; ++j) count[j] += pool[i][j] != 0;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            for (std::size_t j = 0; j < n; ++j) count[j] -= pool[i][j] != 0;
        }
    };
    rec(rec, 0);
    return dedup_representations(std::move(out));
}

std::vector<SgRepresentation> representations_by_point_subsets(const LinearMatroid& m) {
    const Gf3Matrix R = gf3_rep(m);
    const std::size_t r = R.rows(), n = R.cols();
    if (r == 0) return {SgRepresentation{R, {}}};
    auto pts = projective_points(r);
    std::vector<SgRepresentation> out;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == r) {
            Gf3Matrix comb(r, n + r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < n; ++j) comb(i, j) = R(i, j);
                for (std::size_t t = 0; t < r; ++t) comb(i, n + t) = pts[pick[t]][i];
            }
            // Row-reduce [R | S] to [R' | I].
            for (std::size_t t = 0; t < r; ++t) {
                std::size_t p = t;
                while (p < r && comb(p, n + t).is_zero()) ++p;
                if (p == r) return;
                comb = pivot_swap(comb, p, n + t, t);
            }
            std::vector<std::size_t> cols(n);
            for (std::size_t j = 0; j < n; ++j) cols[j] = j;
            Gf3Matrix a = comb.select_columns(cols);
            for (std::size_t j = 0; j < n; ++j)
                if (a.nonzeros_in_column(j) > 2) return;
            out.push_back(SgRepresentation{a, vertex_names(r)});
            return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return dedup_representations(std::move(out));
}

std::string format_representation(const SgRepresentation& rep) {
    std::ostringstream out;
    out << "vertices";
    for (const auto& v : rep.vertex_labels) out << ' ' << v;
    out << '\n' << format_matrix(ExactMatrix(rep.matrix));
    return out.str();
}

SgRepresentation parse_representation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> vertices;
    std::ostringstream rest;
    bool have_vertices = false;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (!have_vertices && !toks.empty() && toks[0] == "vertices") {
            vertices.assign(toks.begin() + 1, toks.end());
            have_vertices = true;
            continue;
        }
        rest << line << '\n';
    }
    ExactMatrix m = parse_matrix(rest.str());
    if (!std::holds_alternative<Gf3Matrix>(m)) throw ParseError("representation must be a gf3 matrix");
    SgRepresentation rep{std::get<Gf3Matrix>(m), vertices};
    if (!have_vertices) rep.vertex_labels = vertex_names(rep.matrix.rows());
    if (rep.vertex_labels.size() != rep.matrix.rows()) throw ParseError("vertex label count mismatch");
    return rep;
}

}  // namespace sgm
