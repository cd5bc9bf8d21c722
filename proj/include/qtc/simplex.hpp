#ifndef QTC_SIMPLEX_HPP
#define QTC_SIMPLEX_HPP

#include <optional>

#include "qtc/twistulant.hpp"

namespace qtc {

/// A lambda-consta-cyclic simplex [(q^t-1)/(q-1), t, q^{t-1}]_q code.
/// Invariant: g * h == x^m - lambda, and lambda has order q-1.
struct SimplexCode {
    Field field;
    unsigned t;
    unsigned m;        // (q^t - 1) / (q - 1)
    unsigned lambda;   // encoding, base-field constant of order q-1
    Polynomial h;      // primitive (or, via the explicit-g path, the cofactor)
    Polynomial g;      // generator, degree m - t
    QuotientRing ring; // (m, lambda)
};

/// Builds the simplex code from a primitive polynomial h of degree t
/// (canonical one from find_primitive_poly when omitted). lambda is
/// derived as x^m mod h, which is always a base-field constant.
/// Throws NotPrimitive, BadDegree.
SimplexCode build_simplex(const Field& f, unsigned t,
                          std::optional<Polynomial> h = std::nullopt);

/// Builds a simplex code from an explicit generator polynomial g dividing
/// x^m - lambda; validates equidistance by enumeration. Covers cyclic
/// simplex codes whose g does not come from a primitive h (the root of
/// the cofactor has order m rather than q^t - 1).
/// Throws NotDivisor, NotSimplex, BadDegree.
SimplexCode simplex_from_explicit_g(const Field& f, unsigned m, unsigned lambda,
                                    const Polynomial& g);

/// t x m generator matrix with rows x^j * g, j = 0..t-1.
Matrix simplex_generator(const SimplexCode& s);

/// All q^t - 1 nonzero codeword polynomials a_i * x^j * g mod (x^m - lambda),
/// ordered by i ascending (nonzero elements by encoding) then j ascending.
std::vector<Polynomial> codeword_polys(const SimplexCode& s);

}  // namespace qtc

#endif
