#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "sgm/errors.hpp"
#include "sgm/scalar.hpp"

namespace sgm {

enum class Domain { gf3, dyadic };

// Labels e1..en used whenever a matrix is built without explicit labels.
std::vector<std::string> default_labels(std::size_t n);

// Dense row-major matrix with one label per column.
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols), labels_(default_labels(cols)) {}

    Matrix(const std::vector<std::vector<T>>& rows, std::vector<std::string> labels = {})
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw ParseError("ragged matrix rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
        set_col_labels(labels.empty() ? default_labels(cols_) : std::move(labels));
    }

    static Matrix from_ints(const std::vector<std::vector<long long>>& rows,
                            std::vector<std::string> labels = {}) {
        std::vector<std::vector<T>> conv;
        conv.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<T> r;
            r.reserve(row.size());
            for (long long x : row) {
                if constexpr (std::is_same_v<T, Gf3>) {
                    r.emplace_back(static_cast<int>(x % 3));
                } else {
                    r.emplace_back(x);
                }
            }
            conv.push_back(std::move(r));
        }
        return Matrix(conv, std::move(labels));
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<std::string>& col_labels() const { return labels_; }
    void set_col_labels(std::vector<std::string> labels) {
        if (labels.size() != cols_) throw ParseError("label count does not match column count");
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (!seen.insert(l).second) throw ParseError("duplicate column label '" + l + "'");
        }
        labels_ = std::move(labels);
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix out(rows_, idx.size());
        std::vector<std::string> labels;
        labels.reserve(idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            for (std::size_t i = 0; i < rows_; ++i) out(i, c) = (*this)(i, idx[c]);
            labels.push_back(labels_[idx[c]]);
        }
        out.labels_ = std::move(labels);
        return out;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols_);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(idx[r], j);
        out.labels_ = labels_;
        return out;
    }

    // Appends a column; the label must be fresh.
    Matrix append_column(const std::vector<T>& col, const std::string& label) const {
        if (col.size() != rows_) throw ParseError("appended column has wrong length");
        Matrix out(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            out(i, cols_) = col[i];
        }
        auto labels = labels_;
        labels.push_back(label);
        out.set_col_labels(std::move(labels));
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void scale_row(std::size_t i, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) * f;
    }
    // row[dst] -= f * row[src]
    void subtract_row_multiple(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(src, j).is_zero()) (*this)(dst, j) = (*this)(dst, j) - f * (*this)(src, j);
        }
    }
    void scale_column(std::size_t j, const T& f) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * f;
    }

    std::size_t nonzeros_in_column(std::size_t j) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < rows_; ++i) n += !(*this)(i, j).is_zero();
        return n;
    }

    // Entry-wise equality; labels are compared as well.
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
               a.labels_ == b.labels_;
    }
    bool same_entries(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
    std::vector<std::string> labels_;
};

using Gf3Matrix = Matrix<Gf3>;
using DyadicMatrix = Matrix<Dyadic>;
using ExactMatrix = std::variant<Gf3Matrix, DyadicMatrix>;

inline Domain domain_of(const ExactMatrix& m) {
    return std::holds_alternative<Gf3Matrix>(m) ? Domain::gf3 : Domain::dyadic;
}

}  // namespace sgm
