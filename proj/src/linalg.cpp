#include "sgm/linalg.hpp"

#include "sgm/combinatorics.hpp"

namespace sgm {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

namespace {

bool preferred_pivot(const Gf3&) { return true; }
bool preferred_pivot(const Dyadic& x) { return x.is_unit(); }

template <class T>
RrefResult<T> rref_impl(const Matrix<T>& m) {
    RrefResult<T> res{m, {}};
    Matrix<T>& a = res.matrix;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pick = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            if (pick == a.rows()) pick = i;
            if (preferred_pivot(a(i, c))) {
                pick = i;
                break;
            }
        }
        if (pick == a.rows()) continue;
        a.swap_rows(r, pick);
        a.scale_row(r, T(1) / a(r, c));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            T f = a(i, c);
            if (!f.is_zero()) a.subtract_row_multiple(i, r, f);
        }
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

// Integer image of selected columns: column j is multiplied by 2^-min_exp(j),
// so the minor of the integer matrix equals the true minor times 2^-shift.
std::vector<BigInt> integer_columns(const DyadicMatrix& m, const std::vector<std::size_t>& cols,
                                    long long& shift) {
    const std::size_t r = m.rows();
    std::vector<BigInt> out(r * cols.size());
    shift = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        bool any = false;
        long long lo = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const Dyadic& x = m(i, cols[c]);
            if (x.is_zero()) continue;
            lo = any ? std::min(lo, x.exponent()) : x.exponent();
            any = true;
        }
        shift += lo;
        for (std::size_t i = 0; i < r; ++i) {
            const Dyadic& x = m(i, cols[c]);
            if (!x.is_zero()) out[i * cols.size() + c] = x.numerator() << static_cast<unsigned>(x.exponent() - lo);
        }
    }
    return out;
}

// Fraction-free elimination. Returns the rank; for square input, det receives
// the determinant.
std::size_t bareiss(std::vector<BigInt> a, std::size_t rows, std::size_t cols, BigInt* det) {
    BigInt prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) {
            if (det) *det = 0;
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
            sign = -sign;
        }
        const BigInt piv = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt f = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i * cols + j] = (a[i * cols + j] * piv - a[r * cols + j] * f) / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = piv;
        ++r;
    }
    if (det) {
        if (r == rows && rows == cols) {
            *det = rows == 0 ? BigInt(1) : BigInt(a[(rows - 1) * cols + (cols - 1)] * sign);
        } else {
            *det = 0;
        }
    }
    return r;
}

std::vector<std::size_t> all_columns(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

Gf3 gf3_minor(const Gf3Matrix& m, const std::vector<std::size_t>& cols) {
    const std::size_t n = cols.size();
    std::vector<Gf3> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, cols[j]);
    Gf3 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p * n + c].is_zero()) ++p;
        if (p == n) return Gf3(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
            det = -det;
        }
        det *= a[c * n + c];
        Gf3 inv = a[c * n + c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            Gf3 f = a[i * n + c] * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
        }
    }
    return det;
}

}  // namespace

RrefResult<Gf3> rref(const Gf3Matrix& m) { return rref_impl(m); }
RrefResult<Dyadic> rref(const DyadicMatrix& m) { return rref_impl(m); }

std::size_t rank(const Gf3Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const DyadicMatrix& m) {
    long long shift = 0;
    auto a = integer_columns(m, all_columns(m.cols()), shift);
    return bareiss(std::move(a), m.rows(), m.cols(), nullptr);
}

std::size_t rank(const ExactMatrix& m) {
    return std::visit([](const auto& x) { return rank(x); }, m);
}

Gf3 column_minor(const Gf3Matrix& m, const std::vector<std::size_t>& cols) {
    if (cols.size() != m.rows()) throw DomainMismatch("minor must be square");
    return gf3_minor(m, cols);
}

Dyadic column_minor(const DyadicMatrix& m, const std::vector<std::size_t>& cols) {
    if (cols.size() != m.rows()) throw DomainMismatch("minor must be square");
    long long shift = 0;
    auto a = integer_columns(m, cols, shift);
    BigInt det;
    bareiss(std::move(a), cols.size(), cols.size(), &det);
    return Dyadic(det, shift);
}

Gf3 determinant(const Gf3Matrix& m) {
    if (m.rows() != m.cols()) throw DomainMismatch("determinant of a non-square matrix");
    return gf3_minor(m, all_columns(m.cols()));
}

Dyadic determinant(const DyadicMatrix& m) {
    if (m.rows() != m.cols()) throw DomainMismatch("determinant of a non-square matrix");
    return column_minor(m, all_columns(m.cols()));
}

bool is_weak_dyadic(const DyadicMatrix& m) {
    const int r = static_cast<int>(m.rows());
    const int n = static_cast<int>(m.cols());
    if (r > n) return false;
    return all_k_subsets(n, r, [&](Mask s) {
        Dyadic d = column_minor(m, mask_to_indices(s));
        return d.is_zero() || d.is_unit();
    });
}

ModPMatrix project_mod_p(const DyadicMatrix& m, long long p) {
    if (p < 3 || p % 2 == 0) throw DomainMismatch("projection needs an odd prime");
    ModPMatrix out{p, m.rows(), m.cols(), std::vector<long long>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.data[i * m.cols() + j] = m(i, j).mod_p(p);
    return out;
}

Gf3Matrix project_mod3(const DyadicMatrix& m) {
    Gf3Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Gf3(static_cast<int>(m(i, j).mod_p(3)));
    out.set_col_labels(m.col_labels());
    return out;
}

long long determinant_mod_p(const ModPMatrix& m, const std::vector<std::size_t>& cols) {
    const std::size_t n = cols.size();
    const long long p = m.p;
    std::vector<long long> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, cols[j]);
    long long det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = (p - det) % p;
        }
        det = det * a[c * n + c] % p;
        long long inv = 1, base = a[c * n + c], e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            long long f = a[i * n + c] * inv % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = ((a[i * n + j] - f * a[c * n + j]) % p + p) % p;
        }
    }
    return det;
}

DyadicMatrix lift_signed(const Gf3Matrix& m) {
    DyadicMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Dyadic(m(i, j).to_int());
    out.set_col_labels(m.col_labels());
    return out;
}

std::vector<std::uint32_t> nonzero_maximal_minors(const Gf3Matrix& m) {
    std::vector<std::uint32_t> out;
    for_each_k_subset(static_cast<int>(m.cols()), static_cast<int>(m.rows()), [&](Mask s) {
        if (!gf3_minor(m, mask_to_indices(s)).is_zero()) out.push_back(s);
    });
    return out;
}

std::vector<std::uint32_t> nonzero_maximal_minors(const DyadicMatrix& m) {
    std::vector<std::uint32_t> out;
    for_each_k_subset(static_cast<int>(m.cols()), static_cast<int>(m.rows()), [&](Mask s) {
        if (!column_minor(m, mask_to_indices(s)).is_zero()) out.push_back(s);
    });
    return out;
}

std::vector<std::uint32_t> nonzero_maximal_minors(const ModPMatrix& m) {
    std::vector<std::uint32_t> out;
    for_each_k_subset(static_cast<int>(m.cols), static_cast<int>(m.rows), [&](Mask s) {
        if (determinant_mod_p(m, mask_to_indices(s)) != 0) out.push_back(s);
    });
    return out;
}

}  // namespace sgm
