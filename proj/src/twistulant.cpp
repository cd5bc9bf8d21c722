#include "qtc/twistulant.hpp"

#include <algorithm>
#include <sstream>

namespace qtc {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrix product over different fields");
    if (a.n_cols() != b.n_rows()) throw Error("matrix dimension mismatch");
    const Field& f = a.field();
    Matrix c(f, a.n_rows(), b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t k = 0; k < a.n_cols(); ++k) {
            unsigned v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.n_cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(k, j)));
        }
    return c;
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t c = 0; c < m.n_cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<unsigned> twist_shift(const Field& f, std::vector<unsigned> v,
                                  unsigned positions, unsigned lambda) {
    for (unsigned s = 0; s < positions; ++s) {
        unsigned last = v.back();
        for (std::size_t i = v.size(); i-- > 1;) v[i] = v[i - 1];
        v[0] = f.mul(lambda, last);
    }
    return v;
}

Matrix materialize(const TwistulantSpec& spec) {
    const auto& ring = spec.ring;
    Matrix m(ring.field, ring.m, ring.m);
    std::vector<unsigned> row(ring.m, 0);
    const auto& c = spec.defining_poly.coeffs();
    std::copy(c.begin(), c.end(), row.begin());
    m.set_row(0, row);
    for (unsigned r = 1; r < ring.m; ++r) {
        row = twist_shift(ring.field, std::move(row), 1, ring.lambda);
        m.set_row(r, row);
    }
    return m;
}

TwistulantSpec spec_product(const TwistulantSpec& a, const TwistulantSpec& b) {
    if (a.ring != b.ring) throw RingMismatch("twistulant specs from different rings");
    return {mul_mod(a.defining_poly, b.defining_poly, a.ring), a.ring};
}

Echelon row_reduce(const Matrix& g) {
    const Field& f = g.field();
    std::vector<std::vector<unsigned>> rows;
    rows.reserve(g.n_rows());
    for (std::size_t r = 0; r < g.n_rows(); ++r) rows.push_back(g.row(r));

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < g.n_cols() && next < rows.size(); ++col) {
        std::size_t pr = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (rows[r][col] != 0) { pr = r; break; }
        if (pr == rows.size()) continue;
        std::swap(rows[next], rows[pr]);
        unsigned s = f.inv(rows[next][col]);
        for (auto& x : rows[next]) x = f.mul(x, s);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) continue;
            unsigned c = rows[r][col];
            for (std::size_t j = 0; j < g.n_cols(); ++j)
                rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[next][j]));
        }
        pivots.push_back(col);
        ++next;
    }
    Matrix red(f, pivots.size(), g.n_cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) red.set_row(r, rows[r]);
    return {std::move(red), std::move(pivots)};
}

std::size_t rank(const Matrix& g) { return row_reduce(g).pivots.size(); }

bool in_row_space(const Echelon& e, const std::vector<unsigned>& word) {
    if (word.size() != e.mat.n_cols()) throw Error("word length mismatch");
    const Field& f = e.mat.field();
    std::vector<unsigned> w = word;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        unsigned c = w[e.pivots[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] = f.sub(w[j], f.mul(c, e.mat.at(r, j)));
    }
    return std::all_of(w.begin(), w.end(), [](unsigned x) { return x == 0; });
}

}  // namespace qtc
