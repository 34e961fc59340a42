#include "sgm/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "sgm/linalg.hpp"
#include "sgm/matrix_io.hpp"

namespace sgm {

namespace {

template <class T>
FundamentalIncidence support_of(const Matrix<T>& rep) {
    FundamentalIncidence fi;
    const std::size_t r = rep.rows();
    std::vector<bool> is_unit_col(rep.cols(), false);
    for (std::size_t i = 0; i < r; ++i) {
        std::optional<std::size_t> found;
        for (std::size_t j = 0; j < rep.cols() && !found; ++j) {
            if (is_unit_col[j] || !(rep(i, j) == T(1))) continue;
            bool unit = true;
            for (std::size_t k = 0; k < r && unit; ++k) unit = k == i || rep(k, j).is_zero();
            if (unit) found = j;
        }
        if (!found) throw Error("matrix is not in standard form: no unit column for row " + std::to_string(i + 1));
        is_unit_col[*found] = true;
        fi.row_positions.push_back(*found);
        fi.row_labels.push_back(rep.col_labels()[*found]);
    }
    for (std::size_t j = 0; j < rep.cols(); ++j) {
        if (is_unit_col[j]) continue;
        fi.col_positions.push_back(j);
        fi.col_labels.push_back(rep.col_labels()[j]);
    }
    fi.dsharp.assign(r, std::vector<int>(fi.col_positions.size(), 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < fi.col_positions.size(); ++c)
            fi.dsharp[i][c] = rep(i, fi.col_positions[c]).is_zero() ? 0 : 1;
    return fi;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Forest edge resolved to (row index, D column index).
struct Slot {
    std::size_t row;
    std::size_t col;
};

std::vector<Slot> resolve_forest(const FundamentalIncidence& fi, const Forest& forest) {
    std::vector<Slot> out;
    UnionFind uf(fi.row_labels.size() + fi.col_labels.size());
    for (const auto& e : forest) {
        auto ri = std::find(fi.row_labels.begin(), fi.row_labels.end(), e.row);
        auto ci = std::find(fi.col_labels.begin(), fi.col_labels.end(), e.col);
        if (ri == fi.row_labels.end() || ci == fi.col_labels.end()) {
            throw InvalidForest("forest edge (" + e.row + ", " + e.col + ") names an unknown row or column");
        }
        Slot s{static_cast<std::size_t>(ri - fi.row_labels.begin()), static_cast<std::size_t>(ci - fi.col_labels.begin())};
        if (fi.dsharp[s.row][s.col] == 0) {
            throw InvalidForest("forest edge (" + e.row + ", " + e.col + ") sits on a zero entry");
        }
        if (!uf.unite(s.row, fi.row_labels.size() + s.col)) {
            throw InvalidForest("forest edges contain a cycle through (" + e.row + ", " + e.col + ")");
        }
        out.push_back(s);
    }
    return out;
}

// Peeling order: each step removes the leaf with the smallest matrix column
// position. Returns (edge index, leaf is a row) pairs in peel order.
std::vector<std::pair<std::size_t, bool>> peel(const FundamentalIncidence& fi, const std::vector<Slot>& slots) {
    const std::size_t r = fi.row_labels.size();
    const std::size_t nodes = r + fi.col_labels.size();
    auto position = [&](std::size_t node) { return node < r ? fi.row_positions[node] : fi.col_positions[node - r]; };
    std::vector<std::vector<std::size_t>> incident(nodes);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        incident[slots[k].row].push_back(k);
        incident[r + slots[k].col].push_back(k);
    }
    std::vector<bool> removed(slots.size(), false);
    std::vector<std::size_t> degree(nodes);
    for (std::size_t v = 0; v < nodes; ++v) degree[v] = incident[v].size();
    std::vector<std::pair<std::size_t, bool>> order;
    for (std::size_t step = 0; step < slots.size(); ++step) {
        std::optional<std::size_t> leaf;
        for (std::size_t v = 0; v < nodes; ++v) {
            if (degree[v] == 1 && (!leaf || position(v) < position(*leaf))) leaf = v;
        }
        std::size_t k = *std::find_if(incident[*leaf].begin(), incident[*leaf].end(),
                                      [&](std::size_t e) { return !removed[e]; });
        removed[k] = true;
        --degree[slots[k].row];
        --degree[r + slots[k].col];
        order.push_back({k, *leaf < r});
    }
    return order;
}

template <class T, class Factor>
Matrix<T> normalize_impl(const Matrix<T>& rep, const Forest& forest, const std::vector<T>& targets, Factor factor) {
    if (targets.size() != forest.size()) throw InvalidForest("one target is needed per forest edge");
    for (const auto& t : targets) {
        if (t.is_zero()) throw ZeroTarget("forest targets must be nonzero");
    }
    FundamentalIncidence fi = support_of(rep);
    auto slots = resolve_forest(fi, forest);
    auto order = peel(fi, slots);
    Matrix<T> out = rep;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [k, leaf_is_row] = *it;
        const std::size_t i = slots[k].row;
        const std::size_t j = fi.col_positions[slots[k].col];
        T f = factor(targets[k], out(i, j), forest[k]);
        if (leaf_is_row) {
            // Scaling the whole row and then the unit column back by f^-1
            // only changes the D part of the row.
            for (auto c : fi.col_positions) out(i, c) = out(i, c) * f;
        } else {
            out.scale_column(j, f);
        }
    }
    return out;
}

template <class T>
T free_factor(const T& target, const T& entry, const ForestEdge&) {
    return target / entry;
}

template <class T>
T sign_factor(const T& target, const T& entry, const ForestEdge& e) {
    if (target == entry) return T(1);
    if (target == -entry) return T(-1);
    throw UnreachableTarget("target at (" + e.row + ", " + e.col + ") is not plus or minus the current entry " +
                            entry.to_string());
}

template <class T>
bool projective_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.col_labels() != b.col_labels()) throw LabelMismatch("matrices have different column labels");
    FundamentalIncidence fa = support_of(a), fb = support_of(b);
    if (!(fa == fb)) return false;
    Forest forest = spanning_forest(fa);
    std::vector<T> ones(forest.size(), T(1));
    return normalize_brylawski(a, forest, ones).same_entries(normalize_brylawski(b, forest, ones));
}

}  // namespace

FundamentalIncidence fundamental_incidence(const Gf3Matrix& rep) { return support_of(rep); }
FundamentalIncidence fundamental_incidence(const DyadicMatrix& rep) { return support_of(rep); }
FundamentalIncidence fundamental_incidence(const ExactMatrix& rep) {
    return std::visit([](const auto& m) { return support_of(m); }, rep);
}

std::size_t cycle_basis_size(const FundamentalIncidence& fi) {
    const std::size_t r = fi.row_labels.size(), c = fi.col_labels.size();
    UnionFind uf(r + c);
    std::size_t components = r + c;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (fi.dsharp[i][j] && uf.unite(i, r + j)) --components;
    return r + c - components;
}

Forest spanning_forest(const FundamentalIncidence& fi) {
    const std::size_t r = fi.row_labels.size(), c = fi.col_labels.size();
    std::vector<std::size_t> nodes(r + c);
    std::iota(nodes.begin(), nodes.end(), 0);
    auto position = [&](std::size_t node) { return node < r ? fi.row_positions[node] : fi.col_positions[node - r]; };
    std::sort(nodes.begin(), nodes.end(), [&](std::size_t x, std::size_t y) { return position(x) < position(y); });
    auto neighbours = [&](std::size_t node) {
        std::vector<std::size_t> out;
        if (node < r) {
            for (std::size_t j = 0; j < c; ++j)
                if (fi.dsharp[node][j]) out.push_back(r + j);
        } else {
            for (std::size_t i = 0; i < r; ++i)
                if (fi.dsharp[i][node - r]) out.push_back(i);
        }
        std::sort(out.begin(), out.end(), [&](std::size_t x, std::size_t y) { return position(x) < position(y); });
        return out;
    };
    Forest forest;
    std::vector<bool> seen(r + c, false);
    for (std::size_t root : nodes) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            for (std::size_t y : neighbours(x)) {
                if (seen[y]) continue;
                seen[y] = true;
                q.push(y);
                std::size_t row = x < r ? x : y, col = (x < r ? y : x) - r;
                forest.push_back({fi.row_labels[row], fi.col_labels[col]});
            }
        }
    }
    return forest;
}

Gf3Matrix normalize_brylawski(const Gf3Matrix& rep, const Forest& forest, const std::vector<Gf3>& targets) {
    return normalize_impl(rep, forest, targets, free_factor<Gf3>);
}
DyadicMatrix normalize_brylawski(const DyadicMatrix& rep, const Forest& forest, const std::vector<Dyadic>& targets) {
    return normalize_impl(rep, forest, targets, free_factor<Dyadic>);
}
Gf3Matrix normalize_restricted(const Gf3Matrix& rep, const Forest& forest, const std::vector<Gf3>& targets) {
    return normalize_impl(rep, forest, targets, sign_factor<Gf3>);
}
DyadicMatrix normalize_restricted(const DyadicMatrix& rep, const Forest& forest, const std::vector<Dyadic>& targets) {
    return normalize_impl(rep, forest, targets, sign_factor<Dyadic>);
}

bool projectively_equivalent(const Gf3Matrix& a, const Gf3Matrix& b) { return projective_impl(a, b); }
bool projectively_equivalent(const DyadicMatrix& a, const DyadicMatrix& b) { return projective_impl(a, b); }
bool projectively_equivalent(const SgRepresentation& a, const SgRepresentation& b) {
    return projective_impl(std::get<DyadicMatrix>(row_reduced(a)), std::get<DyadicMatrix>(row_reduced(b)));
}

ExactMatrix row_reduced(const SgRepresentation& rep, RowField field) {
    if (field == RowField::gf3) return rref(rep.matrix).matrix;
    return rref(lift_signed(rep.matrix)).matrix;
}

std::string row_fingerprint(const SgRepresentation& rep, RowField field) {
    return flatten_matrix(row_reduced(rep, field));
}

bool row_equivalent(const SgRepresentation& a, const SgRepresentation& b, RowField field) {
    if (a.matrix.col_labels() != b.matrix.col_labels()) throw LabelMismatch("representations have different column labels");
    return row_fingerprint(a, field) == row_fingerprint(b, field);
}

std::vector<RowClass> classify_row_equivalence(const std::vector<SgRepresentation>& reps, RowField field) {
    std::vector<RowClass> classes;
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        if (k > 0 && reps[k].matrix.col_labels() != reps[0].matrix.col_labels()) {
            throw LabelMismatch("representations have different column labels");
        }
        std::string fp = row_fingerprint(reps[k], field);
        auto [it, fresh] = index.emplace(fp, classes.size());
        if (fresh) classes.push_back({{}, fp});
        classes[it->second].members.push_back(k);
    }
    return classes;
}

std::vector<std::size_t> class_sizes(const std::vector<RowClass>& classes) {
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.members.size());
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::string format_partition_report(const std::vector<RowClass>& classes) {
    std::ostringstream out;
    std::size_t total = 0;
    for (const auto& c : classes) total += c.members.size();
    out << total << " representations in " << classes.size() << " row-equivalence classes; sizes";
    for (auto s : class_sizes(classes)) out << ' ' << s;
    out << '\n';
    for (std::size_t k = 0; k < classes.size(); ++k) {
        out << "class " << k + 1 << " size " << classes[k].members.size() << " members";
        for (auto m : classes[k].members) out << ' ' << m + 1;
        out << "\n  rref " << classes[k].fingerprint << '\n';
    }
    return out.str();
}

}  // namespace sgm
