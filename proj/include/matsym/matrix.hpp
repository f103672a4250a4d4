#pragma once

#include <cassert>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matsym/domain.hpp"

namespace matsym {

/// Dense row-major integer matrix. Indices are 0-based throughout the
/// library; problem statements that speak 1-based are translated at the
/// boundary. Out-of-range access is a programming error (assert), not a
/// recoverable condition.
class Matrix {
public:
    Matrix() = default;

    Matrix(int n_rows, int n_cols, Value fill = 0)
        : n_rows_(n_rows), n_cols_(n_cols), cells_(static_cast<size_t>(n_rows) * n_cols, fill) {
        assert(n_rows > 0 && n_cols > 0);
    }

    Matrix(int n_rows, int n_cols, std::vector<Value> cells)
        : n_rows_(n_rows), n_cols_(n_cols), cells_(std::move(cells)) {
        assert(n_rows > 0 && n_cols > 0);
        if (cells_.size() != static_cast<size_t>(n_rows) * n_cols)
            throw std::invalid_argument("Matrix: cell count does not match dimensions");
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<Value>> rows) {
        if (rows.size() == 0) throw std::invalid_argument("Matrix::from_rows: no rows");
        const int m = static_cast<int>(rows.begin()->size());
        std::vector<Value> cells;
        cells.reserve(rows.size() * m);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            cells.insert(cells.end(), row.begin(), row.end());
        }
        return Matrix(static_cast<int>(rows.size()), m, std::move(cells));
    }

    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }

    Value operator()(int i, int j) const {
        assert(i >= 0 && i < n_rows_ && j >= 0 && j < n_cols_);
        return cells_[static_cast<size_t>(i) * n_cols_ + j];
    }

    Value& operator()(int i, int j) {
        assert(i >= 0 && i < n_rows_ && j >= 0 && j < n_cols_);
        return cells_[static_cast<size_t>(i) * n_cols_ + j];
    }

    std::span<const Value> row_span(int i) const {
        assert(i >= 0 && i < n_rows_);
        return {cells_.data() + static_cast<size_t>(i) * n_cols_, static_cast<size_t>(n_cols_)};
    }

    std::vector<Value> row(int i) const {
        auto s = row_span(i);
        return {s.begin(), s.end()};
    }

    std::vector<Value> col(int j) const {
        assert(j >= 0 && j < n_cols_);
        std::vector<Value> out(n_rows_);
        for (int i = 0; i < n_rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    std::span<const Value> cells() const { return cells_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int n_rows_ = 0;
    int n_cols_ = 0;
    std::vector<Value> cells_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.n_cols(), m.n_rows());
    for (int i = 0; i < m.n_rows(); ++i)
        for (int j = 0; j < m.n_cols(); ++j) out(j, i) = m(i, j);
    return out;
}

/// A permutation maps target position to source index: applying p to a
/// sequence s yields t with t[i] = s[p[i]].
using Perm = std::vector<int>;

inline bool is_valid_perm(const Perm& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Composition convention: (f∘g)(i) = f(g(i)). Applying g to a matrix and
/// then f equals applying f∘g once.
inline Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
    Perm out(f.size());
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || g[i] >= static_cast<int>(f.size()))
            throw std::invalid_argument("compose: index out of range");
        out[i] = f[g[i]];
    }
    return out;
}

/// result(i,j) = m(row_perm(i), col_perm(j)).
inline Matrix apply_row_col_perm(const Matrix& m, const Perm& row_perm, const Perm& col_perm) {
    if (!is_valid_perm(row_perm, m.n_rows()))
        throw std::invalid_argument("apply_row_col_perm: malformed row permutation");
    if (!is_valid_perm(col_perm, m.n_cols()))
        throw std::invalid_argument("apply_row_col_perm: malformed column permutation");
    Matrix out(m.n_rows(), m.n_cols());
    for (int i = 0; i < m.n_rows(); ++i)
        for (int j = 0; j < m.n_cols(); ++j) out(i, j) = m(row_perm[i], col_perm[j]);
    return out;
}

/// result(i,j) = theta(m(i,j)); theta must cover every value occurring in m.
inline Matrix apply_value_map(const Matrix& m, const std::unordered_map<Value, Value>& theta) {
    Matrix out(m.n_rows(), m.n_cols());
    for (int i = 0; i < m.n_rows(); ++i)
        for (int j = 0; j < m.n_cols(); ++j) {
            auto it = theta.find(m(i, j));
            if (it == theta.end())
                throw std::invalid_argument("apply_value_map: value outside map domain");
            out(i, j) = it->second;
        }
    return out;
}

}  // namespace matsym
