#ifndef QTC_TWISTULANT_HPP
#define QTC_TWISTULANT_HPP

#include <string>
#include <vector>

#include "qtc/poly.hpp"

namespace qtc {

/// Dense rectangular matrix over GF(q), entries stored as canonical
/// encodings in row-major order.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), n_rows_(rows), n_cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const { return field_; }
    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }

    unsigned at(std::size_t r, std::size_t c) const { return data_[r * n_cols_ + c]; }
    unsigned& at(std::size_t r, std::size_t c) { return data_[r * n_cols_ + c]; }

    std::vector<unsigned> row(std::size_t r) const {
        return {data_.begin() + r * n_cols_, data_.begin() + (r + 1) * n_cols_};
    }
    void set_row(std::size_t r, const std::vector<unsigned>& v) {
        std::copy(v.begin(), v.end(), data_.begin() + r * n_cols_);
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && n_rows_ == o.n_rows_ && n_cols_ == o.n_cols_ &&
               data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t n_rows_, n_cols_;
    std::vector<unsigned> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Text form: one row per line, entries separated by single spaces.
std::string matrix_to_text(const Matrix& m);

/// An m x m consta-cyclic (twistulant) matrix, identified by its defining
/// polynomial (degree < m) and the ring (m, lambda). The spec is the
/// source of truth; the dense matrix is a derived view.
struct TwistulantSpec {
    Polynomial defining_poly;
    QuotientRing ring;

    TwistulantSpec(Polynomial p, QuotientRing r)
        : defining_poly(reduce_mod(p, r)), ring(std::move(r)) {}

    bool operator==(const TwistulantSpec& o) const {
        return defining_poly == o.defining_poly && ring == o.ring;
    }
    bool operator!=(const TwistulantSpec& o) const { return !(*this == o); }
};

/// Row 0 is the defining polynomial padded to length m; each later row is
/// the lambda-consta-cyclic right shift of the previous one.
Matrix materialize(const TwistulantSpec& spec);

/// The lambda-consta-cyclic shift (a_0,...,a_{n-1}) -> (lambda*a_{n-1}, a_0,...,a_{n-2})
/// applied `positions` times.
std::vector<unsigned> twist_shift(const Field& f, std::vector<unsigned> v,
                                  unsigned positions, unsigned lambda);

/// Spec whose matrix is the product of the two operands' matrices;
/// defining polynomial is mul_mod in the shared ring. Throws RingMismatch.
TwistulantSpec spec_product(const TwistulantSpec& a, const TwistulantSpec& b);

// --- elimination over GF(q) ---

/// Reduced row echelon form: only the nonzero rows are kept, pivots are
/// scaled to 1 and cleared above and below. Pivot search takes the first
/// nonzero entry in the column, lowest row index first.
struct Echelon {
    Matrix mat;                    // rank x n
    std::vector<std::size_t> pivots;  // pivot column per row
};

Echelon row_reduce(const Matrix& g);

std::size_t rank(const Matrix& g);

/// Membership of a word in the row space of an echelon form.
bool in_row_space(const Echelon& e, const std::vector<unsigned>& word);

}  // namespace qtc

#endif
