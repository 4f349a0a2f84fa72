#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "linfeas/dense_matrix.hpp"
#include "linfeas/sparse_matrix.hpp"

namespace linfeas {

using MatrixVariant = std::variant<DenseMatrix, SparseRowMatrix>;

namespace detail {

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

inline std::string next_data_line(std::istream& in, const std::string& path) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '%') continue;
        return line;
    }
    throw std::runtime_error("matrix market: unexpected end of file in " + path);
}

}  // namespace detail

// Matrix Market "coordinate real general" (sparse) and "array real general"
// (dense, column-major values) formats. Values are written as decimal text
// with 17 significant digits so a write/read round trip is exact.
inline void write_matrix_market(const DenseMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("matrix market: cannot open " + path + " for writing");
    out << "%%MatrixMarket matrix array real general\n";
    out << m.rows() << " " << m.cols() << "\n";
    char buf[64];
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            out << buf << "\n";
        }
    if (!out) throw std::runtime_error("matrix market: write failed for " + path);
}

inline void write_matrix_market(const SparseRowMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("matrix market: cannot open " + path + " for writing");
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.rows() << " " << m.cols() << " " << m.nonzeros() << "\n";
    char buf[64];
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << (i + 1) << " " << (j + 1) << " " << buf << "\n";
        }
    if (!out) throw std::runtime_error("matrix market: write failed for " + path);
}

inline MatrixVariant read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("matrix market: cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(detail::lower(header));
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix")
        throw std::runtime_error("matrix market: malformed header in " + path);
    if (field != "real" || symmetry != "general")
        throw std::runtime_error("matrix market: unsupported field/symmetry in " + path);

    if (format == "array") {
        std::istringstream ls(detail::next_data_line(in, path));
        std::size_t rows = 0, cols = 0;
        if (!(ls >> rows >> cols))
            throw std::runtime_error("matrix market: malformed size line in " + path);
        DenseMatrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) {
                std::istringstream vs(detail::next_data_line(in, path));
                double v;
                if (!(vs >> v))
                    throw std::runtime_error("matrix market: malformed value in " + path);
                m(i, j) = v;
            }
        return m;
    }
    if (format == "coordinate") {
        std::istringstream ls(detail::next_data_line(in, path));
        std::size_t rows = 0, cols = 0, nnz = 0;
        if (!(ls >> rows >> cols >> nnz))
            throw std::runtime_error("matrix market: malformed size line in " + path);
        struct Coord {
            std::size_t i, j;
            double v;
        };
        std::vector<Coord> entries;
        entries.reserve(nnz);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t k = 0; k < nnz; ++k) {
            std::istringstream es(detail::next_data_line(in, path));
            std::size_t i, j;
            double v;
            if (!(es >> i >> j >> v))
                throw std::runtime_error("matrix market: malformed entry in " + path);
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw std::runtime_error("matrix market: index out of declared bounds in " + path);
            if (!seen.insert({i, j}).second)
                throw std::runtime_error("matrix market: duplicate coordinate entry in " + path);
            entries.push_back({i - 1, j - 1, v});
        }
        std::sort(entries.begin(), entries.end(), [](const Coord& a, const Coord& b) {
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });
        SparseRowMatrix m(rows, cols);
        for (const auto& e : entries) m.push_entry(e.i, e.j, e.v);
        return m;
    }
    throw std::runtime_error("matrix market: unknown format '" + format + "' in " + path);
}

// Column vectors travel as n x 1 array files.
template <class Real>
void write_vector_market(const Vec<Real>& v, const std::string& path) {
    DenseMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = double(v[i]);
    write_matrix_market(m, path);
}

inline Vec<double> read_vector_market(const std::string& path) {
    auto var = read_matrix_market(path);
    const auto* d = std::get_if<DenseMatrix>(&var);
    if (!d || d->cols() != 1)
        throw std::runtime_error("matrix market: " + path + " is not an n x 1 array file");
    Vec<double> v(d->rows());
    for (std::size_t i = 0; i < d->rows(); ++i) v[i] = (*d)(i, 0);
    return v;
}

}  // namespace linfeas
