#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "matsym/matrix.hpp"

namespace matsym {

namespace detail {
inline void require_same_length(std::span<const Value> u, std::span<const Value> v) {
    if (u.size() != v.size()) throw std::invalid_argument("lex comparison: length mismatch");
}
}  // namespace detail

inline std::strong_ordering lex_cmp(std::span<const Value> u, std::span<const Value> v) {
    detail::require_same_length(u, v);
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k] != v[k]) return u[k] <=> v[k];
    return std::strong_ordering::equal;
}

inline bool lex_leq(std::span<const Value> u, std::span<const Value> v) {
    return lex_cmp(u, v) <= 0;
}

inline bool lex_lt(std::span<const Value> u, std::span<const Value> v) {
    return lex_cmp(u, v) < 0;
}

/// Compare the reversals of u and v without materializing them.
inline bool rev_lex_leq(std::span<const Value> u, std::span<const Value> v) {
    detail::require_same_length(u, v);
    for (size_t k = u.size(); k-- > 0;)
        if (u[k] != v[k]) return u[k] < v[k];
    return true;
}

/// Entwined comparison: ⟨u1,v2,u3,v4,...⟩ <=lex ⟨v1,u2,v3,u4,...⟩, computed
/// by index arithmetic rather than building the interleavings.
inline bool entwined_lex_leq(std::span<const Value> u, std::span<const Value> v) {
    detail::require_same_length(u, v);
    for (size_t k = 0; k < u.size(); ++k) {
        const Value a = (k % 2 == 0) ? u[k] : v[k];
        const Value b = (k % 2 == 0) ? v[k] : u[k];
        if (a != b) return a < b;
    }
    return true;
}

/// Rows appended in order; length n_rows * n_cols.
inline std::vector<Value> linearize_row_wise(const Matrix& m) {
    return {m.cells().begin(), m.cells().end()};
}

}  // namespace matsym
