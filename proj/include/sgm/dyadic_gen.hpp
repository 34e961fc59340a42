#pragma once

#include <string>
#include <vector>

#include "sgm/matrix.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

// Standard dyadic representations of the non-Fano matroid and its dual.
DyadicMatrix non_fano_rep();
DyadicMatrix non_fano_dual_rep();

// Every column x with entries in {0} and {+-2^k : |k| <= bound} whose first
// nonzero entry is 1 and for which [rep | x] is weak dyadic, plus the zero
// column first. Each scaling class under +-2^j has exactly one such member.
// rep must be weak dyadic with full row rank.
std::vector<std::vector<Dyadic>> extension_columns(const DyadicMatrix& rep, int bound = 2);

// Simple single-element extensions (no loop, no parallel element), in the
// order of extension_columns. The new element gets the first unused label of
// the form e<k>. Results are in standard form.
std::vector<DyadicMatrix> single_extensions(const DyadicMatrix& rep, int bound = 2);
// Cosimple single-element coextensions, via extensions of the dual.
std::vector<DyadicMatrix> single_coextensions(const DyadicMatrix& rep, int bound = 2);

// Brute-force minor test: some contraction/deletion of m is isomorphic to n.
bool has_minor(const LinearMatroid& m, const LinearMatroid& n);

enum class Move { extension, coextension };

struct CatalogEntry {
    std::string id;
    std::string seed;  // "nonfano" or "nonfano-dual"
    std::vector<Move> ancestry;
    DyadicMatrix rep;

    std::size_t size() const { return rep.cols(); }
    std::size_t rank() const { return rep.rows(); }
};

struct GenerateOptions {
    int exponent_bound = 2;
    // Re-run with exponent_bound + 1 and throw CandidateBoundExceeded if the
    // isomorphism classes found differ.
    bool verify_bound = true;
    bool exclude_p8 = true;
};

// Breadth-first closure of the two seeds under simple extensions and
// cosimple coextensions up to max_size elements, keeping one matroid per
// isomorphism class. Candidates of each size are processed in lexicographic
// order of their flattened standard form. Every entry is checked to be
// 3-connected, simple, cosimple and weak dyadic.
std::vector<CatalogEntry> generate_matroids(std::size_t max_size, const GenerateOptions& opt = {});

// Standard P8 representation used by the exclusion filter.
DyadicMatrix p8_rep();

// FNV-1a digest of the flattened matrix, as 16 hex digits.
std::string content_id(const DyadicMatrix& rep);

// One line per entry: id size rank seed ancestry matrix, where ancestry is a
// comma-separated list of EXT/COEXT (or "-") and matrix is flattened.
std::string format_catalog(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_catalog(const std::string& text);

// Nonzero maximal minors of the mod-p projection match the bases of rep.
bool projection_preserves_bases(const DyadicMatrix& rep, long long p);

}  // namespace sgm
