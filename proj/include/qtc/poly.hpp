#ifndef QTC_POLY_HPP
#define QTC_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtc/gf.hpp"

namespace qtc {

/// Univariate polynomial over GF(q). Coefficients are canonical element
/// encodings in ascending degree ("least significant coefficient on the
/// left") and are kept normalized: no trailing zero, the zero polynomial
/// stores an empty vector and reports degree() == -1.
class Polynomial {
public:
    Polynomial(Field f, std::vector<unsigned> coeffs)
        : field_(std::move(f)), coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    static Polynomial zero(const Field& f) { return {f, {}}; }
    static Polynomial one(const Field& f) { return {f, {1}}; }
    /// c * x^e
    static Polynomial x_pow(const Field& f, unsigned e, unsigned c = 1) {
        std::vector<unsigned> v(e + 1, 0);
        v[e] = c;
        return {f, std::move(v)};
    }

    const Field& field() const { return field_; }
    const std::vector<unsigned>& coeffs() const { return coeffs_; }
    int degree() const { return int(coeffs_.size()) - 1; }  // -1 sentinel for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    unsigned coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    bool operator==(const Polynomial& o) const {
        return field_ == o.field_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    Field field_;
    std::vector<unsigned> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, unsigned c);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

/// Quotient and remainder of num / den. Throws DivisionByZeroPoly.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& num, const Polynomial& den);

/// Exact division; throws NotDivisible (carrying the remainder) if the
/// remainder is nonzero.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

/// The quotient ring GF(q)[x] / (x^m - lambda).
struct QuotientRing {
    Field field;
    unsigned m;
    unsigned lambda;  // nonzero encoding

    QuotientRing(Field f, unsigned m_, unsigned lambda_)
        : field(std::move(f)), m(m_), lambda(lambda_) {
        if (lambda == 0) throw Error("quotient ring requires lambda != 0");
    }

    bool operator==(const QuotientRing& o) const {
        return field == o.field && m == o.m && lambda == o.lambda;
    }
    bool operator!=(const QuotientRing& o) const { return !(*this == o); }
};

/// Reduce by the rule x^m -> lambda until degree < m.
Polynomial reduce_mod(const Polynomial& a, const QuotientRing& ring);

/// a * b reduced in the quotient ring. Throws FieldMismatch.
Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const QuotientRing& ring);

/// x^e reduced mod h (h monic). Throws NotMonic.
Polynomial power_residue(const Polynomial& h, unsigned long long e);

/// True iff h (monic, degree t) is irreducible over its field and the
/// residue of x mod h has multiplicative order q^t - 1.
bool is_primitive(const Polynomial& h, unsigned t);

/// The monic primitive polynomial of degree t with the smallest integer
/// encoding of its coefficient vector; deterministic.
Polynomial find_primitive_poly(const Field& f, unsigned t);

/// Text form: comma-separated canonical encodings, ascending degree;
/// "0" for the zero polynomial.
std::string poly_to_text(const Polynomial& p);

/// Parses the text form. Coefficients may be signed in (-q, q); negative
/// values are normalized via field negation. Throws ParseError.
Polynomial poly_from_text(const Field& f, const std::string& text);

/// Normalizes a signed coefficient vector into a polynomial.
Polynomial poly_from_signed(const Field& f, const std::vector<long long>& coeffs);

}  // namespace qtc

#endif
