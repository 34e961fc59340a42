#include "sgm/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <unordered_map>

#include "sgm/linalg.hpp"

namespace sgm {

struct LinearMatroid::State {
    std::vector<Mask> bases;
    // Lazily filled rank memo: -1 means unknown. Concurrent first writers
    // store the same value, so relaxed ordering is sufficient.
    std::unique_ptr<std::atomic<std::int8_t>[]> rank_memo;
};

namespace {

template <class T>
Matrix<T> drop_dependent_rows(const Matrix<T>& m) {
    std::vector<std::size_t> keep;
    std::size_t current = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto trial = keep;
        trial.push_back(i);
        std::size_t r = rank(m.select_rows(trial));
        if (r > current) {
            keep = std::move(trial);
            current = r;
        }
    }
    if (keep.size() == m.rows()) return m;
    return m.select_rows(keep);
}

template <class T>
bool minor_nonzero(const Matrix<T>& m, Mask s) {
    return !column_minor(m, mask_to_indices(s)).is_zero();
}

Gf3Matrix standard_form_gf3(const Gf3Matrix& a, const std::vector<std::size_t>& basis) {
    Gf3Matrix m = a;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t c = basis[i];
        std::size_t p = i;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) throw Error("standard_form: columns are not a basis");
        m = pivot_swap(m, p, c, i);
    }
    return m;
}

DyadicMatrix standard_form_dyadic(const DyadicMatrix& a, const std::vector<std::size_t>& basis) {
    const std::size_t r = a.rows();
    Dyadic det_b = column_minor(a, basis);
    if (det_b.is_zero()) throw Error("standard_form: columns are not a basis");
    DyadicMatrix out(r, a.cols());
    out.set_col_labels(a.col_labels());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        auto pos = std::find(basis.begin(), basis.end(), j);
        if (pos != basis.end()) {
            out(static_cast<std::size_t>(pos - basis.begin()), j) = Dyadic(1);
            continue;
        }
        // Cramer's rule: coordinate i of column j in the basis.
        for (std::size_t i = 0; i < r; ++i) {
            auto cols = basis;
            cols[i] = j;
            Dyadic d = column_minor(a, cols);
            if (!d.is_zero()) out(i, j) = d / det_b;
        }
    }
    return out;
}

std::vector<std::size_t> complement_indices(std::size_t n, Mask m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!(m >> i & 1)) out.push_back(i);
    return out;
}

}  // namespace

LinearMatroid::LinearMatroid(ExactMatrix rep) : state_(std::make_shared<State>()) {
    rep_ = std::visit([](const auto& m) -> ExactMatrix { return drop_dependent_rows(m); }, rep);
    std::visit(
        [&](const auto& m) {
            if (m.cols() > 20) throw Error("groundset too large for bitmask matroid");
            labels_ = m.col_labels();
            rank_ = m.rows();
            for_each_k_subset(static_cast<int>(m.cols()), static_cast<int>(m.rows()), [&](Mask s) {
                if (minor_nonzero(m, s)) state_->bases.push_back(s);
            });
        },
        rep_);
    std::sort(state_->bases.begin(), state_->bases.end());
    std::size_t memo = std::size_t{1} << labels_.size();
    state_->rank_memo = std::make_unique<std::atomic<std::int8_t>[]>(memo);
    for (std::size_t i = 0; i < memo; ++i) state_->rank_memo[i].store(-1, std::memory_order_relaxed);
}

std::size_t LinearMatroid::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownElement("unknown element '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

Mask LinearMatroid::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= Mask{1} << index_of(l);
    return m;
}

std::vector<std::string> LinearMatroid::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (auto i : mask_to_indices(m)) out.push_back(labels_[i]);
    return out;
}

const std::vector<Mask>& LinearMatroid::basis_masks() const { return state_->bases; }

bool LinearMatroid::is_basis(Mask m) const {
    return std::binary_search(state_->bases.begin(), state_->bases.end(), m);
}

int LinearMatroid::rank_of(Mask subset) const {
    if (subset & ~full_mask()) throw UnknownElement("subset mask outside the groundset");
    auto& slot = state_->rank_memo[subset];
    std::int8_t cached = slot.load(std::memory_order_relaxed);
    if (cached >= 0) return cached;
    int best = 0;
    for (Mask b : state_->bases) {
        best = std::max(best, popcount(b & subset));
        if (best == popcount(subset) || best == static_cast<int>(rank_)) break;
    }
    slot.store(static_cast<std::int8_t>(best), std::memory_order_relaxed);
    return best;
}

SubsetFamily LinearMatroid::family(const std::vector<Mask>& masks) const {
    std::vector<std::vector<std::size_t>> idx;
    idx.reserve(masks.size());
    for (Mask m : masks) idx.push_back(mask_to_indices(m));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    SubsetFamily f;
    for (const auto& set : idx) {
        std::vector<std::string> s;
        for (auto i : set) s.push_back(labels_[i]);
        f.member_sets.push_back(std::move(s));
    }
    return f;
}

SubsetFamily bases(const LinearMatroid& m) { return m.family(m.basis_masks()); }

std::vector<Mask> circuit_masks(const LinearMatroid& m) {
    std::vector<Mask> out;
    const Mask full = m.full_mask();
    for (Mask s = 1; s <= full && s != 0; ++s) {
        int k = popcount(s);
        if (k > static_cast<int>(m.rank()) + 1) continue;
        if (m.rank_of(s) != k - 1) continue;
        bool minimal = true;
        for (Mask rest = s; rest; rest &= rest - 1) {
            Mask e = rest & (~rest + 1);
            if (m.rank_of(s & ~e) != k - 1) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

SubsetFamily circuits(const LinearMatroid& m) { return m.family(circuit_masks(m)); }

ExactMatrix standard_form(const LinearMatroid& m, std::optional<Mask> basis) {
    Mask b = basis ? *basis : (m.basis_masks().empty() ? 0 : m.basis_masks().front());
    if (!m.is_basis(b)) throw Error("standard_form: mask is not a basis");
    auto cols = mask_to_indices(b);
    return std::visit(
        [&](const auto& a) -> ExactMatrix {
            using M = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<M, Gf3Matrix>) {
                return standard_form_gf3(a, cols);
            } else {
                return standard_form_dyadic(a, cols);
            }
        },
        m.rep());
}

LinearMatroid dual(const LinearMatroid& m) {
    const std::size_t n = m.size();
    const Mask b = m.basis_masks().front();
    const auto basis = mask_to_indices(b);
    const auto nonbasis = complement_indices(n, b);
    ExactMatrix sf = standard_form(m, b);
    return std::visit(
        [&](const auto& s) -> LinearMatroid {
            using M = std::decay_t<decltype(s)>;
            using T = std::decay_t<decltype(s(0, 0))>;
            M out(nonbasis.size(), n);
            out.set_col_labels(m.groundset());
            for (std::size_t t = 0; t < nonbasis.size(); ++t) {
                out(t, nonbasis[t]) = T(1);
                for (std::size_t i = 0; i < basis.size(); ++i) out(t, basis[i]) = -s(i, nonbasis[t]);
            }
            return LinearMatroid(ExactMatrix(std::move(out)));
        },
        sf);
}

LinearMatroid minor(const LinearMatroid& m, Mask contract_set, Mask delete_set) {
    if ((contract_set | delete_set) & ~m.full_mask()) throw UnknownElement("minor: mask outside groundset");
    if (contract_set & delete_set) throw Error("minor: contract and delete sets overlap");
    const std::size_t n = m.size();
    // Independent part of the contraction set, extended to a basis.
    Mask indep = 0;
    for (auto i : mask_to_indices(contract_set)) {
        Mask t = indep | (Mask{1} << i);
        if (m.rank_of(t) == popcount(t)) indep = t;
    }
    const Mask keep = m.full_mask() & ~contract_set & ~delete_set;
    const auto keep_idx = mask_to_indices(keep);
    if (indep == 0) {
        return std::visit([&](const auto& a) { return LinearMatroid(ExactMatrix(a.select_columns(keep_idx))); },
                          m.rep());
    }
    Mask basis = 0;
    for (Mask b : m.basis_masks()) {
        if ((b & indep) == indep) {
            basis = b;
            break;
        }
    }
    ExactMatrix sf = standard_form(m, basis);
    const auto basis_cols = mask_to_indices(basis);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < basis_cols.size(); ++i)
        if (!(indep >> basis_cols[i] & 1)) rows.push_back(i);
    (void)n;
    return std::visit(
        [&](const auto& s) { return LinearMatroid(ExactMatrix(s.select_rows(rows).select_columns(keep_idx))); },
        sf);
}

LinearMatroid delete_element(const LinearMatroid& m, const std::string& e) {
    return minor(m, 0, Mask{1} << m.index_of(e));
}

LinearMatroid contract_element(const LinearMatroid& m, const std::string& e) {
    return minor(m, Mask{1} << m.index_of(e), 0);
}

bool is_simple(const LinearMatroid& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m.rank_of(Mask{1} << i) == 0) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.rank_of((Mask{1} << i) | (Mask{1} << j)) < 2) return false;
    }
    return true;
}

bool is_cosimple(const LinearMatroid& m) {
    // A coloop lies in every basis; a series pair meets every basis.
    const std::size_t n = m.size();
    const auto& bs = m.basis_masks();
    for (std::size_t i = 0; i < n; ++i) {
        Mask e = Mask{1} << i;
        if (std::all_of(bs.begin(), bs.end(), [&](Mask b) { return (b & e) != 0; })) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            Mask p = e | (Mask{1} << j);
            if (std::all_of(bs.begin(), bs.end(), [&](Mask b) { return (b & p) != 0; })) return false;
        }
    }
    return true;
}

namespace {

// True iff some partition (A, B) with |A|, |B| >= k has r(A)+r(B)-r(E) <= k-1.
bool has_separation(const LinearMatroid& m, int k) {
    const std::size_t n = m.size();
    if (n < 2) return false;
    const Mask full = m.full_mask();
    const Mask last = Mask{1} << (n - 1);
    const int r = static_cast<int>(m.rank());
    for (Mask a = 1; a < last; ++a) {
        Mask b = full & ~a;
        if (popcount(a) < k || popcount(b) < k) continue;
        if (m.rank_of(a) + m.rank_of(b) - r <= k - 1) return true;
    }
    return false;
}

}  // namespace

bool is_connected(const LinearMatroid& m) { return !has_separation(m, 1); }

bool is_3connected(const LinearMatroid& m) { return !has_separation(m, 1) && !has_separation(m, 2); }

bool matroids_equal(const LinearMatroid& a, const LinearMatroid& b) {
    auto la = a.groundset(), lb = b.groundset();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) throw GroundsetMismatch("matroids have different groundsets");
    if (a.rank() != b.rank() || a.basis_masks().size() != b.basis_masks().size()) return false;
    std::vector<std::size_t> to_a(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) to_a[j] = a.index_of(b.groundset()[j]);
    for (Mask bb : b.basis_masks()) {
        Mask mapped = 0;
        for (auto j : mask_to_indices(bb)) mapped |= Mask{1} << to_a[j];
        if (!a.is_basis(mapped)) return false;
    }
    return true;
}

namespace {

struct IsoData {
    std::vector<std::vector<int>> element_inv;  // per element: basis count, then circuit counts by size
    std::vector<std::vector<int>> pair_bases;   // bases containing both i and j
    std::vector<int> circuit_spectrum;
};

IsoData iso_data(const LinearMatroid& m) {
    const std::size_t n = m.size();
    IsoData d;
    d.element_inv.assign(n, std::vector<int>(n + 2, 0));
    d.pair_bases.assign(n, std::vector<int>(n, 0));
    d.circuit_spectrum.assign(n + 2, 0);
    for (Mask b : m.basis_masks()) {
        auto idx = mask_to_indices(b);
        for (auto i : idx) {
            d.element_inv[i][0]++;
            for (auto j : idx) d.pair_bases[i][j]++;
        }
    }
    for (Mask c : circuit_masks(m)) {
        int s = popcount(c);
        d.circuit_spectrum[s]++;
        for (auto i : mask_to_indices(c)) d.element_inv[i][s]++;
    }
    return d;
}

}  // namespace

std::string isomorphism_invariant(const LinearMatroid& m) {
    IsoData d = iso_data(m);
    auto inv = d.element_inv;
    std::sort(inv.begin(), inv.end());
    std::ostringstream out;
    out << m.size() << ':' << m.rank() << ':' << m.basis_masks().size() << ':';
    for (int c : d.circuit_spectrum) out << c << ',';
    for (const auto& e : inv) {
        out << '[';
        for (int x : e) out << x << ',';
        out << ']';
    }
    return out.str();
}

std::optional<std::vector<std::size_t>> are_isomorphic(const LinearMatroid& a, const LinearMatroid& b) {
    const std::size_t n = a.size();
    if (n != b.size() || a.rank() != b.rank() || a.basis_masks().size() != b.basis_masks().size())
        return std::nullopt;
    IsoData da = iso_data(a), db = iso_data(b);
    if (da.circuit_spectrum != db.circuit_spectrum) return std::nullopt;
    {
        auto ia = da.element_inv, ib = db.element_inv;
        std::sort(ia.begin(), ia.end());
        std::sort(ib.begin(), ib.end());
        if (ia != ib) return std::nullopt;
    }
    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    std::optional<std::vector<std::size_t>> found;

    auto bases_match = [&] {
        for (Mask ba : a.basis_masks()) {
            Mask mapped = 0;
            for (auto i : mask_to_indices(ba)) mapped |= Mask{1} << map[i];
            if (!b.is_basis(mapped)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return bases_match();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || da.element_inv[i] != db.element_inv[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = da.pair_bases[k][i] == db.pair_bases[map[k]][j];
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (self(self, i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (search(search, 0)) found = map;
    return found;
}

std::string format_family(const SubsetFamily& f) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < f.member_sets.size(); ++i) {
        if (i) out << ", ";
        out << '{';
        for (std::size_t j = 0; j < f.member_sets[i].size(); ++j) {
            if (j) out << ',';
            out << f.member_sets[i][j];
        }
        out << '}';
    }
    out << '}';
    return out.str();
}

}  // namespace sgm
