#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "matsym/matrix.hpp"

namespace matsym {

// Matrix text format: first line "n m", then n lines of m space-separated
// integers. Writing then reading (or the reverse, for canonically spaced
// input) reproduces the data bit-exactly.

inline Matrix read_matrix(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("matrix format: missing dimension line");
    if (n <= 0 || m <= 0) throw std::invalid_argument("matrix format: non-positive dimensions");
    std::vector<Value> cells(static_cast<size_t>(n) * m);
    for (auto& c : cells)
        if (!(in >> c)) throw std::invalid_argument("matrix format: too few cells");
    return Matrix(n, m, std::move(cells));
}

inline Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    Matrix m = read_matrix(in);
    std::string rest;
    if (in >> rest) throw std::invalid_argument("matrix format: trailing content");
    return m;
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.n_rows() << ' ' << m.n_cols() << '\n';
    for (int i = 0; i < m.n_rows(); ++i) {
        for (int j = 0; j < m.n_cols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

inline std::string format_matrix(const Matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

inline Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_matrix(in);
}

}  // namespace matsym
