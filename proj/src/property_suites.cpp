#include "sgm/property_suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "sgm/dyadic_gen.hpp"
#include "sgm/equivalence.hpp"
#include "sgm/errors.hpp"
#include "sgm/linalg.hpp"
#include "sgm/matrix_io.hpp"
#include "sgm/matroid.hpp"
#include "sgm/random_instances.hpp"
#include "sgm/sg_enum.hpp"
#include "sgm/signed_graph.hpp"

namespace sgm {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Runs body once per trial; body returns an empty string on success and a
// description otherwise. Exceptions count as failures.
CheckResult run_check(const std::string& name, std::size_t trials, const std::function<std::string(std::size_t)>& body) {
    CheckResult res;
    res.name = name;
    for (std::size_t t = 0; t < trials; ++t) {
        std::string msg;
        try {
            msg = body(t);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        ++res.trials;
        if (!msg.empty()) {
            if (res.failures == 0) res.first_failure = "trial " + std::to_string(t) + ": " + msg;
            ++res.failures;
        }
    }
    return res;
}

std::size_t scaled(double scale, std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(scale * static_cast<double>(n))));
}

Gf3Matrix random_gf3(Rng& rng, std::size_t r, std::size_t c) {
    Gf3Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Gf3(static_cast<int>(pick(rng, 0, 2)));
    return m;
}

DyadicMatrix random_dyadic_instance(Rng& rng) {
    std::size_t r = pick(rng, 2, 4);
    return random_weak_dyadic(rng, r, pick(rng, r + 1, 8));
}

std::string describe(const SignedGraph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges()) {
        out << e.label << '(' << g.vertices()[e.u] << ',' << g.vertices()[e.v] << (e.negative() ? ",-" : ",+") << ") ";
    }
    return out.str();
}

// ---- linalg ----

std::vector<CheckResult> linalg_suite(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    Rng rng(opt.seed);
    out.push_back(run_check("rref-idempotent-gf3", scaled(opt.scale, 300), [&](std::size_t) {
        auto m = random_gf3(rng, pick(rng, 1, 5), pick(rng, 1, 8));
        auto a = rref(m);
        auto b = rref(a.matrix);
        if (!(b.matrix == a.matrix) || b.pivots != a.pivots) return std::string("rref of rref differs");
        if (a.pivots.size() != rank(m)) return std::string("pivot count differs from rank");
        return std::string();
    }));
    out.push_back(run_check("rref-idempotent-dyadic", scaled(opt.scale, 200), [&](std::size_t) {
        auto m = random_dyadic_instance(rng);
        auto a = rref(m);
        if (!(rref(a.matrix).matrix == a.matrix)) return std::string("rref of rref differs");
        if (rank(m) != m.rows()) return std::string("standard form lost full rank");
        return std::string();
    }));
    out.push_back(run_check("determinant-row-scaling", scaled(opt.scale, 200), [&](std::size_t) {
        auto m = random_dyadic_instance(rng);
        std::vector<std::size_t> cols(m.rows());
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        DyadicMatrix sq = m.select_columns(cols);
        Dyadic f = Dyadic::pow2(static_cast<long long>(pick(rng, 0, 4)) - 2);
        DyadicMatrix scaled_m = sq;
        scaled_m.scale_row(pick(rng, 0, sq.rows() - 1), f);
        if (!(determinant(scaled_m) == f * determinant(sq))) return std::string("det(scaled) != f * det");
        return std::string();
    }));
    out.push_back(run_check("projection-preserves-bases", scaled(opt.scale, 150), [&](std::size_t) {
        auto m = random_dyadic_instance(rng);
        for (long long p : {3LL, 5LL}) {
            if (!projection_preserves_bases(m, p)) return "mod " + std::to_string(p) + " basis pattern differs";
        }
        return std::string();
    }));
    out.push_back(run_check("matrix-text-round-trip", scaled(opt.scale, 200), [&](std::size_t t) {
        ExactMatrix m = t % 2 ? ExactMatrix(random_dyadic_instance(rng))
                              : ExactMatrix(random_gf3(rng, pick(rng, 1, 4), pick(rng, 1, 7)));
        if (!(parse_matrix(format_matrix(m)) == m)) return std::string("format_matrix does not round-trip");
        if (!(parse_flat_matrix(flatten_matrix(m)) == m)) return std::string("flatten_matrix does not round-trip");
        return std::string();
    }));
    return out;
}

// ---- matroid ----

std::vector<CheckResult> matroid_suite(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    Rng rng(opt.seed + 1);
    out.push_back(run_check("dual-bases-are-complements", scaled(opt.scale, 150), [&](std::size_t) {
        LinearMatroid m{ExactMatrix(random_dyadic_instance(rng))};
        LinearMatroid d = dual(m);
        if (d.groundset() != m.groundset()) return std::string("dual changed the groundset");
        std::vector<Mask> comp;
        for (Mask b : m.basis_masks()) comp.push_back(m.full_mask() & ~b);
        std::sort(comp.begin(), comp.end());
        if (comp != d.basis_masks()) return std::string("dual bases are not the complements");
        if (!matroids_equal(dual(d), m)) return std::string("double dual differs");
        return std::string();
    }));
    out.push_back(run_check("delete-contract-commute", scaled(opt.scale, 150), [&](std::size_t) {
        LinearMatroid m{ExactMatrix(random_dyadic_instance(rng))};
        std::size_t a = pick(rng, 0, m.size() - 1), b = pick(rng, 0, m.size() - 2);
        if (b >= a) ++b;
        const auto& e = m.groundset()[a];
        const auto& f = m.groundset()[b];
        LinearMatroid x = contract_element(delete_element(m, e), f);
        LinearMatroid y = delete_element(contract_element(m, f), e);
        if (!matroids_equal(x, y)) return "deleting " + e + " and contracting " + f + " depends on order";
        return std::string();
    }));
    out.push_back(run_check("circuits-minimal-dependent", scaled(opt.scale, 100), [&](std::size_t) {
        LinearMatroid m{ExactMatrix(random_dyadic_instance(rng))};
        for (Mask c : circuit_masks(m)) {
            if (m.rank_of(c) != popcount(c) - 1) return std::string("circuit rank is not size - 1");
            for (auto i : mask_to_indices(c)) {
                Mask smaller = c & ~(Mask{1} << i);
                if (m.rank_of(smaller) != popcount(smaller)) return std::string("proper subset of a circuit is dependent");
            }
        }
        return std::string();
    }));
    out.push_back(run_check("isomorphic-under-relabelling", scaled(opt.scale, 100), [&](std::size_t) {
        DyadicMatrix rep = random_dyadic_instance(rng);
        std::vector<std::size_t> perm(rep.cols());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        DyadicMatrix shuffled = rep.select_columns(perm);
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < perm.size(); ++j) labels.push_back("x" + std::to_string(j + 1));
        shuffled.set_col_labels(labels);
        LinearMatroid a{ExactMatrix(rep)}, b{ExactMatrix(shuffled)};
        if (isomorphism_invariant(a) != isomorphism_invariant(b)) return std::string("invariant changed");
        if (!are_isomorphic(a, b)) return std::string("no isomorphism found");
        return std::string();
    }));
    return out;
}

// ---- equivalence ----

std::vector<CheckResult> equivalence_suite(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_normalization_canonical(opt.seed + 2, scaled(opt.scale, 1000)));
    out.push_back(check_restricted_normalization(opt.seed + 3, scaled(opt.scale, 1000)));
    Rng rng(opt.seed + 4);
    out.push_back(run_check("row-equivalence-relation", scaled(opt.scale, 40), [&](std::size_t) {
        Gf3Matrix rep = random_signed_graphic_rep(rng, pick(rng, 3, 5), pick(rng, 5, 8));
        auto reps = enumerate_signed_graphic(LinearMatroid(ExactMatrix(rep)));
        if (reps.empty()) return std::string("signed-graphic matrix has no representation");
        std::shuffle(reps.begin(), reps.end(), rng);
        if (reps.size() > 6) reps.resize(6);
        // Add row-permuted, row-negated copies so classes have several members.
        std::vector<SgRepresentation> pool = reps;
        for (const auto& r0 : reps) {
            SgRepresentation copy = r0;
            std::vector<std::size_t> rows(copy.matrix.rows());
            std::iota(rows.begin(), rows.end(), std::size_t{0});
            std::shuffle(rows.begin(), rows.end(), rng);
            copy.matrix = copy.matrix.select_rows(rows);
            copy.matrix.scale_row(0, Gf3(2));
            pool.push_back(copy);
        }
        const std::size_t k = pool.size();
        std::vector<std::vector<bool>> eq(k, std::vector<bool>(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) eq[a][b] = row_equivalent(pool[a], pool[b]);
        for (std::size_t a = 0; a < k; ++a) {
            if (!eq[a][a]) return std::string("not reflexive");
            for (std::size_t b = 0; b < k; ++b) {
                if (eq[a][b] != eq[b][a]) return std::string("not symmetric");
                if (!eq[a][b]) continue;
                if (!projectively_equivalent(pool[a], pool[b])) {
                    return std::string("row-equivalent but not projectively equivalent");
                }
                for (std::size_t c = 0; c < k; ++c) {
                    if (eq[b][c] && !eq[a][c]) return std::string("not transitive");
                }
            }
        }
        for (std::size_t a = 0; a < reps.size(); ++a) {
            if (!eq[a][reps.size() + a]) return std::string("row operations changed the class");
        }
        return std::string();
    }));
    return out;
}

// ---- signed graphs ----

std::vector<CheckResult> siggraph_suite(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_circuits_match_incidence(opt.seed + 5, scaled(opt.scale, 500)));
    out.push_back(check_resign_preserves_circuits(opt.seed + 6, scaled(opt.scale, 1000)));
    out.push_back(check_cylinder_flips(opt.seed + 7, scaled(opt.scale, 90), scaled(opt.scale, 30)));
    out.push_back(check_enumeration_matches_oracle(opt.seed + 8, scaled(opt.scale, 50)));
    Rng rng(opt.seed + 9);
    out.push_back(run_check("pruning-does-not-change-output", scaled(opt.scale, 20), [&](std::size_t) {
        Gf3Matrix rep = random_signed_graphic_rep(rng, pick(rng, 3, 5), pick(rng, 5, 9));
        LinearMatroid m{ExactMatrix(rep)};
        SearchOptions plain;
        plain.processed_count_pruning = false;
        plain.memoize_chosen_sets = false;
        if (enumerate_signed_graphic(m) != enumerate_signed_graphic(m, plain)) {
            return std::string("optional pruning changed the representations");
        }
        return std::string();
    }));
    return out;
}

}  // namespace

CheckResult check_circuits_match_incidence(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    return run_check("circuits-match-incidence-matroid", trials, [&](std::size_t) {
        SignedGraph g = random_signed_graph(rng, 8, 12);
        if (label_sorted(circuits_sg(g)) != label_sorted(circuits(graph_matroid(g)))) {
            return "circuit families differ on " + describe(g);
        }
        return std::string();
    });
}

CheckResult check_enumeration_matches_oracle(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    return run_check("enumeration-matches-oracle", trials, [&](std::size_t t) {
        ExactMatrix rep;
        if (t % 2 == 0) {
            std::size_t v = pick(rng, 3, 4);
            rep = ExactMatrix(random_signed_graphic_rep(rng, v, pick(rng, v, 8)));
        } else {
            std::size_t r = pick(rng, 2, 4);
            rep = ExactMatrix(random_weak_dyadic(rng, r, pick(rng, r + 1, 8)));
        }
        LinearMatroid m{rep};
        if (m.rank() > 4) return std::string("instance outside the oracle's range");
        auto fast = enumerate_signed_graphic(m);
        auto slow = representations_by_point_subsets(m);
        if (fast != slow) {
            return "search found " + std::to_string(fast.size()) + ", oracle " + std::to_string(slow.size()) +
                   " for " + flatten_matrix(rep);
        }
        return std::string();
    });
}

CheckResult check_resign_preserves_circuits(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    return run_check("resign-preserves-circuits", trials, [&](std::size_t) {
        SignedGraph g = random_signed_graph(rng, 8, 12);
        auto s = random_vertex_subset(rng, g);
        if (label_sorted(circuits_sg(resign(g, s))) != label_sorted(circuits_sg(g))) {
            return "resigning changed the circuits of " + describe(g);
        }
        return std::string();
    });
}

CheckResult check_cylinder_flips(std::uint64_t seed, std::size_t trials, std::size_t degenerate_trials) {
    Rng rng(seed);
    return run_check("cylinder-flip-preserves-circuits", trials + degenerate_trials, [&](std::size_t t) {
        bool degenerate = t >= trials;
        CylinderInstance inst = random_cylinder_instance(rng, degenerate);
        FlipOutcome f = cylinder_flip_detailed(inst.graph, inst.split);
        if (!verify_flip(inst.graph, f.graph)) {
            return std::string(degenerate ? "degenerate " : "") + "flip changed the circuits of " + describe(inst.graph);
        }
        SignedGraph back = cylinder_flip(f.graph, f.inverse_split);
        if (!verify_flip(inst.graph, back)) return std::string("double flip changed the circuits");
        return std::string();
    });
}

CheckResult check_normalization_canonical(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    const DyadicMatrix base = p8_rep();
    const Forest forest = spanning_forest(fundamental_incidence(base));
    const std::vector<Dyadic> ones(forest.size(), Dyadic(1));
    const DyadicMatrix canonical = normalize_brylawski(base, forest, ones);
    CheckResult res = run_check("normalization-canonical", trials, [&](std::size_t) {
        DyadicMatrix s = random_row_column_scaling(rng, base);
        DyadicMatrix n = normalize_brylawski(s, forest, ones);
        if (!(n == canonical)) return std::string("scaled copy normalizes differently");
        if (!(normalize_brylawski(n, forest, ones) == n)) return std::string("normalization is not idempotent");
        return std::string();
    });
    return res;
}

CheckResult check_restricted_normalization(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    return run_check("restricted-normalization", trials, [&](std::size_t t) {
        DyadicMatrix rep = random_weak_dyadic(rng, pick(rng, 2, 4), pick(rng, 5, 8));
        FundamentalIncidence fi = fundamental_incidence(rep);
        Forest forest = spanning_forest(fi);
        if (forest.empty()) return std::string();
        std::vector<Dyadic> targets;
        for (const auto& e : forest) {
            auto row = std::find(fi.row_labels.begin(), fi.row_labels.end(), e.row) - fi.row_labels.begin();
            auto col = std::find(rep.col_labels().begin(), rep.col_labels().end(), e.col) - rep.col_labels().begin();
            Dyadic cur = rep(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
            targets.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? cur : -cur);
        }
        const bool reachable = t % 2 == 0;
        if (!reachable) {
            std::size_t k = pick(rng, 0, targets.size() - 1);
            targets[k] = targets[k] * Dyadic::pow2(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
        }
        try {
            DyadicMatrix n = normalize_restricted(rep, forest, targets);
            if (!reachable) return std::string("accepted a target that is not +-current");
            if (!(normalize_restricted(n, forest, targets) == n)) return std::string("not idempotent");
        } catch (const UnreachableTarget&) {
            if (reachable) return std::string("rejected a +-current target");
        }
        return std::string();
    });
}

std::vector<std::string> suite_names() { return {"linalg", "matroid", "siggraph", "equivalence"}; }

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& n : suite_names()) {
            auto part = run_suite(n, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "linalg") return linalg_suite(opt);
    if (name == "matroid") return matroid_suite(opt);
    if (name == "siggraph") return siggraph_suite(opt);
    if (name == "equivalence") return equivalence_suite(opt);
    throw Error("unknown suite '" + name + "'");
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        if (r.passed()) {
            out << r.name << ": pass (" << r.trials << " trials)\n";
        } else {
            out << r.name << ": FAIL " << r.failures << '/' << r.trials << ": " << r.first_failure << '\n';
        }
    }
    return out.str();
}

}  // namespace sgm
