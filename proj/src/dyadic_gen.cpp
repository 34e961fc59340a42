#include "sgm/dyadic_gen.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "sgm/combinatorics.hpp"
#include "sgm/linalg.hpp"
#include "sgm/matrix_io.hpp"

namespace sgm {

namespace {

using Wide = __int128;

bool zero_or_power_of_two(Wide v) {
    if (v < 0) v = -v;
    return v == 0 || (v & (v - 1)) == 0;
}

// det([rep_S | x]) as an integer combination of x, scaled so that all
// coefficients are integers. last is the highest index with a nonzero
// coefficient.
struct Functional {
    std::vector<Wide> coef;
    std::size_t last = 0;
};

Wide to_wide(const Dyadic& d, long long shift) {
    // d * 2^shift, known to be an integer.
    BigInt v = d.numerator();
    long long e = d.exponent() + shift;
    if (e < 0) throw Error("internal: functional scaling is not integral");
    v <<= static_cast<unsigned>(e);
    if (boost::multiprecision::abs(v) > BigInt(1) << 60) throw Error("extension search coefficient overflow");
    return static_cast<Wide>(static_cast<long long>(v));
}

std::vector<Functional> cofactor_functionals(const DyadicMatrix& rep) {
    const std::size_t r = rep.rows(), n = rep.cols();
    std::map<std::vector<Wide>, std::size_t> seen;
    std::vector<Functional> out;
    for_each_k_subset(static_cast<int>(n), static_cast<int>(r) - 1, [&](Mask s) {
        auto cols = mask_to_indices(s);
        std::vector<Dyadic> c(r);
        bool any = false;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::size_t> rows;
            for (std::size_t k = 0; k < r; ++k)
                if (k != i) rows.push_back(k);
            Dyadic d = r == 1 ? Dyadic(1) : determinant(rep.select_rows(rows).select_columns(cols));
            c[i] = ((i + r - 1) % 2 == 0) ? d : -d;
            any = any || !d.is_zero();
        }
        if (!any) return;
        long long shift = 0;
        for (const auto& d : c)
            if (!d.is_zero()) shift = std::max(shift, -d.exponent());
        Functional f;
        for (const auto& d : c) f.coef.push_back(d.is_zero() ? 0 : to_wide(d, shift));
        // An overall power of two does not affect the test; strip it so equal
        // functionals collapse.
        Wide g = 0;
        for (auto v : f.coef) g |= (v < 0 ? -v : v);
        while (g != 0 && (g & 1) == 0) {
            for (auto& v : f.coef) v /= 2;
            g >>= 1;
        }
        if (seen.count(f.coef)) return;
        for (std::size_t i = 0; i < r; ++i)
            if (f.coef[i] != 0) f.last = i;
        seen.emplace(f.coef, out.size());
        out.push_back(std::move(f));
    });
    return out;
}

std::string fresh_label(const std::vector<std::string>& used) {
    for (std::size_t k = used.size() + 1;; ++k) {
        std::string l = "e" + std::to_string(k);
        if (std::find(used.begin(), used.end(), l) == used.end()) return l;
    }
}

DyadicMatrix in_standard_form(const DyadicMatrix& m) {
    return std::get<DyadicMatrix>(standard_form(LinearMatroid(ExactMatrix(m))));
}

// Column divided by its first nonzero entry.
std::vector<Dyadic> normalized(std::vector<Dyadic> c) {
    for (const auto& v : c) {
        if (v.is_zero()) continue;
        Dyadic f = v;
        for (auto& w : c) w = w / f;
        break;
    }
    return c;
}

}  // namespace

DyadicMatrix non_fano_rep() {
    return DyadicMatrix::from_ints({{1, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 0, 1}});
}

DyadicMatrix non_fano_dual_rep() {
    return in_standard_form(std::get<DyadicMatrix>(dual(LinearMatroid(ExactMatrix(non_fano_rep()))).rep()));
}

DyadicMatrix p8_rep() {
    DyadicMatrix m = DyadicMatrix::from_ints(
        {{1, 0, 0, 0, 0, 1, 1, -1}, {0, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 1, 0, 1, 1, 0, 0}, {0, 0, 0, 1, -1, 0, 0, 0}});
    const Dyadic minus_half(BigInt(-1), -1);
    m(1, 7) = minus_half;
    m(2, 7) = minus_half;
    m(3, 5) = minus_half;
    m(3, 6) = minus_half;
    return m;
}

std::vector<std::vector<Dyadic>> extension_columns(const DyadicMatrix& rep, int bound) {
    const std::size_t r = rep.rows();
    auto functionals = cofactor_functionals(rep);
    std::vector<std::vector<const Functional*>> due(r);
    for (const auto& f : functionals) due[f.last].push_back(&f);

    // Entries are searched as integers scaled by 2^bound.
    std::vector<Wide> values;
    std::vector<Dyadic> exact;
    for (int k = -bound; k <= bound; ++k) {
        for (int s : {1, -1}) {
            values.push_back(Wide(s) << (k + bound));
            exact.push_back(s == 1 ? Dyadic::pow2(k) : -Dyadic::pow2(k));
        }
    }
    std::vector<std::vector<Dyadic>> out;
    out.emplace_back(r, Dyadic(0));
    std::vector<Wide> x(r, 0);
    std::vector<int> choice(r, -1);  // -1 = zero entry, otherwise index into values

    auto check = [&](std::size_t depth) {
        for (const Functional* f : due[depth]) {
            Wide s = 0;
            for (std::size_t i = 0; i <= depth; ++i) s += f->coef[i] * x[i];
            if (!zero_or_power_of_two(s)) return false;
        }
        return true;
    };
    const int one = 2 * bound;  // index of +2^0 in values
    std::function<void(std::size_t, bool)> dfs = [&](std::size_t depth, bool started) {
        if (depth == r) {
            if (!started) return;
            std::vector<Dyadic> col(r);
            for (std::size_t i = 0; i < r; ++i) col[i] = choice[i] < 0 ? Dyadic(0) : exact[choice[i]];
            out.push_back(std::move(col));
            return;
        }
        auto attempt = [&](int c) {
            choice[depth] = c;
            x[depth] = c < 0 ? 0 : values[c];
            if (check(depth)) dfs(depth + 1, started || c >= 0);
        };
        attempt(-1);
        if (!started) {
            attempt(one);
        } else {
            for (int c = 0; c < static_cast<int>(values.size()); ++c) attempt(c);
        }
        choice[depth] = -1;
        x[depth] = 0;
    };
    dfs(0, false);
    return out;
}

std::vector<DyadicMatrix> single_extensions(const DyadicMatrix& rep, int bound) {
    std::vector<std::vector<Dyadic>> existing;
    for (std::size_t j = 0; j < rep.cols(); ++j) existing.push_back(normalized(rep.column(j)));
    const std::string label = fresh_label(rep.col_labels());
    std::vector<DyadicMatrix> out;
    for (auto& col : extension_columns(rep, bound)) {
        bool zero = std::all_of(col.begin(), col.end(), [](const Dyadic& d) { return d.is_zero(); });
        if (zero) continue;
        if (std::find(existing.begin(), existing.end(), col) != existing.end()) continue;
        out.push_back(in_standard_form(rep.append_column(col, label)));
    }
    return out;
}

std::vector<DyadicMatrix> single_coextensions(const DyadicMatrix& rep, int bound) {
    LinearMatroid d = dual(LinearMatroid(ExactMatrix(rep)));
    std::vector<DyadicMatrix> out;
    for (const auto& ext : single_extensions(in_standard_form(std::get<DyadicMatrix>(d.rep())), bound)) {
        LinearMatroid back = dual(LinearMatroid(ExactMatrix(ext)));
        out.push_back(in_standard_form(std::get<DyadicMatrix>(back.rep())));
    }
    return out;
}

bool has_minor(const LinearMatroid& m, const LinearMatroid& n) {
    if (n.size() > m.size() || n.rank() > m.rank()) return false;
    const int drop = static_cast<int>(m.size() - n.size());
    const int contract = static_cast<int>(m.rank() - n.rank());
    if (contract > drop) return false;
    const std::string target = isomorphism_invariant(n);
    bool found = false;
    for_each_k_subset(static_cast<int>(m.size()), drop, [&](Mask removed) {
        if (found) return;
        auto idx = mask_to_indices(removed);
        for_each_k_subset(drop, contract, [&](Mask pick) {
            if (found) return;
            Mask c = 0;
            for (auto k : mask_to_indices(pick)) c |= Mask{1} << idx[k];
            if (m.rank_of(c) != contract) return;
            LinearMatroid mm = minor(m, c, removed & ~c);
            if (mm.rank() != n.rank()) return;
            if (isomorphism_invariant(mm) != target) return;
            found = are_isomorphic(mm, n).has_value();
        });
    });
    return found;
}

std::string content_id(const DyadicMatrix& rep) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : flatten_matrix(ExactMatrix(rep))) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct Candidate {
    std::string key;
    CatalogEntry entry;
};

std::vector<CatalogEntry> generate_once(std::size_t max_size, int bound, bool exclude_p8) {
    if (max_size < 7) throw Error("generate_matroids needs max_size >= 7");
    if (max_size > 12) throw Error("generate_matroids supports max_size <= 12");
    std::vector<CatalogEntry> catalog;
    for (auto [name, rep] : {std::pair{"nonfano", non_fano_rep()}, std::pair{"nonfano-dual", non_fano_dual_rep()}}) {
        CatalogEntry e{content_id(rep), name, {}, rep};
        catalog.push_back(std::move(e));
    }
    const LinearMatroid p8{ExactMatrix(p8_rep())};
    std::vector<CatalogEntry> layer = catalog;
    for (std::size_t size = 8; size <= max_size; ++size) {
        std::vector<Candidate> cands;
        for (const auto& parent : layer) {
            for (Move mv : {Move::extension, Move::coextension}) {
                auto reps = mv == Move::extension ? single_extensions(parent.rep, bound)
                                                  : single_coextensions(parent.rep, bound);
                for (auto& r : reps) {
                    CatalogEntry e{content_id(r), parent.seed, parent.ancestry, r};
                    e.ancestry.push_back(mv);
                    cands.push_back({flatten_matrix(ExactMatrix(r)), std::move(e)});
                }
            }
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
        std::map<std::string, std::vector<LinearMatroid>> buckets;
        std::vector<CatalogEntry> accepted;
        std::string last_key;
        for (auto& c : cands) {
            if (!accepted.empty() && c.key == last_key) continue;
            last_key = c.key;
            LinearMatroid m{ExactMatrix(c.entry.rep)};
            std::string inv = isomorphism_invariant(m);
            auto& bucket = buckets[inv];
            bool dup = std::any_of(bucket.begin(), bucket.end(),
                                   [&](const LinearMatroid& o) { return are_isomorphic(m, o).has_value(); });
            if (dup) continue;
            bucket.push_back(m);
            if (!is_3connected(m) || !is_simple(m) || !is_cosimple(m) || !is_weak_dyadic(c.entry.rep)) {
                throw Error("generated matroid " + c.entry.id + " failed validation");
            }
            if (exclude_p8 && has_minor(m, p8)) continue;
            accepted.push_back(std::move(c.entry));
        }
        catalog.insert(catalog.end(), accepted.begin(), accepted.end());
        layer = std::move(accepted);
    }
    return catalog;
}

bool same_classes(const std::vector<CatalogEntry>& a, const std::vector<CatalogEntry>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        LinearMatroid mx{ExactMatrix(x.rep)};
        bool hit = false;
        for (std::size_t k = 0; k < b.size() && !hit; ++k) {
            if (used[k] || b[k].size() != x.size() || b[k].rank() != x.rank()) continue;
            if (are_isomorphic(mx, LinearMatroid(ExactMatrix(b[k].rep)))) {
                used[k] = true;
                hit = true;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

std::vector<CatalogEntry> generate_matroids(std::size_t max_size, const GenerateOptions& opt) {
    auto catalog = generate_once(max_size, opt.exponent_bound, opt.exclude_p8);
    if (opt.verify_bound) {
        auto wider = generate_once(max_size, opt.exponent_bound + 1, opt.exclude_p8);
        if (!same_classes(catalog, wider)) {
            throw CandidateBoundExceeded("raising the exponent bound to " + std::to_string(opt.exponent_bound + 1) +
                                         " changes the catalog (" + std::to_string(catalog.size()) + " vs " +
                                         std::to_string(wider.size()) + " matroids)");
        }
    }
    return catalog;
}

std::string format_catalog(const std::vector<CatalogEntry>& entries) {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << e.id << ' ' << e.size() << ' ' << e.rank() << ' ' << e.seed << ' ';
        if (e.ancestry.empty()) out << '-';
        for (std::size_t k = 0; k < e.ancestry.size(); ++k) {
            out << (k ? "," : "") << (e.ancestry[k] == Move::extension ? "EXT" : "COEXT");
        }
        out << ' ' << flatten_matrix(ExactMatrix(e.rep)) << '\n';
    }
    return out.str();
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        CatalogEntry e;
        std::size_t size = 0, rank = 0;
        std::string ancestry;
        if (!(ls >> e.id >> size >> rank >> e.seed >> ancestry)) {
            throw ParseError("catalog line " + std::to_string(lineno) + " is truncated");
        }
        std::string rest;
        std::getline(ls, rest);
        ExactMatrix m = parse_flat_matrix(rest);
        if (domain_of(m) != Domain::dyadic) throw ParseError("catalog matrices must be dyadic");
        e.rep = std::get<DyadicMatrix>(m);
        if (e.size() != size || e.rank() != rank) {
            throw ParseError("catalog line " + std::to_string(lineno) + " has inconsistent size or rank");
        }
        if (ancestry != "-") {
            std::stringstream as(ancestry);
            std::string mv;
            while (std::getline(as, mv, ',')) {
                if (mv == "EXT") {
                    e.ancestry.push_back(Move::extension);
                } else if (mv == "COEXT") {
                    e.ancestry.push_back(Move::coextension);
                } else {
                    throw ParseError("unknown move '" + mv + "' on catalog line " + std::to_string(lineno));
                }
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool projection_preserves_bases(const DyadicMatrix& rep, long long p) {
    auto dyadic_bases = nonzero_maximal_minors(rep);
    auto projected = nonzero_maximal_minors(project_mod_p(rep, p));
    std::sort(dyadic_bases.begin(), dyadic_bases.end());
    std::sort(projected.begin(), projected.end());
    return dyadic_bases == projected;
}

}  // namespace sgm
