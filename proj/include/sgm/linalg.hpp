#pragma once

#include <cstdint>
#include <vector>

#include "sgm/matrix.hpp"

namespace sgm {

template <class T>
struct RrefResult {
    Matrix<T> matrix;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Over the dyadic ring the pivot of each column is
// chosen among unit entries when possible; if a non-unit pivot makes the
// reduction leave Z[1/2], NonDyadicDivision is thrown.
RrefResult<Gf3> rref(const Gf3Matrix& m);
RrefResult<Dyadic> rref(const DyadicMatrix& m);

// Scale pivot_row by the inverse of the pivot, clear the rest of pivot_col,
// then exchange rows swap_to_row and pivot_row.
template <class T>
Matrix<T> pivot_swap(const Matrix<T>& m, std::size_t pivot_row, std::size_t pivot_col,
                     std::size_t swap_to_row) {
    if (m(pivot_row, pivot_col).is_zero()) throw ZeroPivot("pivot entry is zero");
    Matrix<T> out = m;
    T inv = T(1) / out(pivot_row, pivot_col);
    out.scale_row(pivot_row, inv);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        if (i == pivot_row) continue;
        T f = out(i, pivot_col);
        if (!f.is_zero()) out.subtract_row_multiple(i, pivot_row, f);
    }
    out.swap_rows(pivot_row, swap_to_row);
    return out;
}

std::size_t rank(const Gf3Matrix& m);
std::size_t rank(const DyadicMatrix& m);
std::size_t rank(const ExactMatrix& m);

Gf3 determinant(const Gf3Matrix& m);
Dyadic determinant(const DyadicMatrix& m);

// Determinant of the square submatrix on the given columns (all rows).
Gf3 column_minor(const Gf3Matrix& m, const std::vector<std::size_t>& cols);
Dyadic column_minor(const DyadicMatrix& m, const std::vector<std::size_t>& cols);

// True iff every maximal (rows x rows) column minor is zero or +-2^k.
bool is_weak_dyadic(const DyadicMatrix& m);

// Matrix over GF(p) for an odd prime p, entries in [0, p).
struct ModPMatrix {
    long long p = 3;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long long> data;
    long long at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

ModPMatrix project_mod_p(const DyadicMatrix& m, long long p);
Gf3Matrix project_mod3(const DyadicMatrix& m);
long long determinant_mod_p(const ModPMatrix& m, const std::vector<std::size_t>& cols);

// Lift a GF(3) matrix to the dyadic ring using representatives {-1, 0, 1}.
DyadicMatrix lift_signed(const Gf3Matrix& m);

// Column subsets (as bitmasks) of size rows() whose minor is nonzero.
std::vector<std::uint32_t> nonzero_maximal_minors(const Gf3Matrix& m);
std::vector<std::uint32_t> nonzero_maximal_minors(const DyadicMatrix& m);
std::vector<std::uint32_t> nonzero_maximal_minors(const ModPMatrix& m);

}  // namespace sgm
