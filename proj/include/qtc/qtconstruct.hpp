#ifndef QTC_QTCONSTRUCT_HPP
#define QTC_QTCONSTRUCT_HPP

#include <variant>

#include "qtc/simplex.hpp"

namespace qtc {

/// The 2-generator QT two-weight [pm, 2t; (p-1)q^{t-1}, pq^{t-1}]_q code.
/// Generator layout (block form, 2m rows x pm columns):
///   [ G_t  G_t ... G_t  ]
///   [ 0    B_1 ... B_{p-1} ]
struct QTTwoWeightCode {
    SimplexCode base;
    unsigned p;
    std::vector<TwistulantSpec> selection;  // the B_1..B_{p-1}
    Matrix generator;
    unsigned n, k, w1, w2;
};

/// The 2-generator QT simplex [(q^{2t}-1)/(q-1), 2t, q^{2t-1}]_q code,
/// block layout with q^t + 1 blocks:
///   [ G_t  G_t ... G_t      0   ]
///   [ 0    B_1 ... B_{q^t-1} G_t ]
struct QTSimplexCode {
    SimplexCode base;
    Matrix generator;
    unsigned n, k, d;
};

/// The first p-1 entries of codeword_polys(base) in canonical order,
/// wrapped as twistulant specs. Throws BadP outside [2, q^t].
std::vector<TwistulantSpec> select_B(const SimplexCode& base, unsigned p);

/// Builds the two-weight code; explicit selections must be pairwise
/// distinct codeword polynomials of the base simplex code.
/// Throws BadP, DuplicateSelection, NotCodeword.
QTTwoWeightCode build_two_weight(const Field& f, unsigned t, unsigned p,
                                 std::optional<Polynomial> h = std::nullopt,
                                 std::optional<std::vector<Polynomial>> selection = std::nullopt);

/// Builds the dimension-2t simplex code in 2-generator QT form (p = q^t).
QTSimplexCode build_simplex_2t(const Field& f, unsigned t,
                               std::optional<Polynomial> h = std::nullopt);

/// The two m-row block rows of the generator (subcodes C1 and C2).
std::pair<Matrix, Matrix> subcode_generators(const QTTwoWeightCode& c);

/// Column permutation from block form to interleaved form: block-form
/// column b*m + s moves to s*blocks + b. In the interleaved form the
/// literal lambda-consta-cyclic shift by `blocks` positions maps
/// codewords to codewords.
Matrix interleave_columns(const Matrix& block_form, unsigned blocks);

/// Dispatch: p in [2, q^t] builds the two-weight code, p = q^t + 1 the
/// 2-generator QT simplex code. Throws BadP otherwise.
using AnyQTCode = std::variant<QTTwoWeightCode, QTSimplexCode>;
AnyQTCode construct_code(const Field& f, unsigned t, unsigned p,
                         std::optional<Polynomial> h = std::nullopt,
                         std::optional<std::vector<Polynomial>> selection = std::nullopt);

const Matrix& generator_of(const AnyQTCode& c);
const SimplexCode& base_of(const AnyQTCode& c);

}  // namespace qtc

#endif
