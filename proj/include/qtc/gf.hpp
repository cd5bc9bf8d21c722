#ifndef QTC_GF_HPP
#define QTC_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qtc/errors.hpp"

namespace qtc {

/// A finite field GF(q), q = char^ext_degree a prime power, q <= 256.
///
/// Elements are handled by their canonical integer encoding
/// enc = sum a_i * char^i of the polynomial-basis coordinates a_i.
/// For extension fields the modulus is the canonical irreducible
/// polynomial of the right degree over GF(char): the one with the
/// smallest integer encoding (equivalently, smallest when coefficient
/// vectors are compared from the highest degree downwards).
///
/// Field objects are immutable and shared; make_field() caches one
/// instance per q, so operator== is a pointer comparison.
class Field {
public:
    unsigned q() const;
    unsigned characteristic() const;
    unsigned ext_degree() const;
    /// Modulus coefficients over the prime subfield, ascending degree,
    /// size ext_degree+1. Empty for prime fields.
    const std::vector<unsigned>& modulus() const;

    // Arithmetic on canonical encodings.
    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned inv(unsigned a) const;  // throws DivisionByZero on 0
    unsigned pow(unsigned a, unsigned long long e) const;

    unsigned element_order(unsigned a) const;  // throws ZeroElement on 0
    unsigned primitive_element() const;

    bool operator==(const Field& o) const { return data_ == o.data_; }
    bool operator!=(const Field& o) const { return data_ != o.data_; }

    struct Data;

private:
    explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    friend Field make_field(unsigned q);
    std::shared_ptr<const Data> data_;
};

/// Returns GF(q). Throws NotPrimePower if q is not a prime power
/// (or out of the supported range [2, 256]).
Field make_field(unsigned q);

/// A field element bound to its field; thin value wrapper over the
/// canonical encoding.
struct FieldElement {
    Field field;
    unsigned enc = 0;

    FieldElement(Field f, unsigned e) : field(std::move(f)), enc(e) {}

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return {field, field.add(enc, o.enc)};
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return {field, field.sub(enc, o.enc)};
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return {field, field.mul(enc, o.enc)};
    }
    FieldElement operator-() const { return {field, field.neg(enc)}; }
    FieldElement inv() const { return {field, field.inv(enc)}; }
    unsigned order() const { return field.element_order(enc); }

    bool operator==(const FieldElement& o) const {
        return field == o.field && enc == o.enc;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    void check(const FieldElement& o) const {
        if (field != o.field) throw FieldMismatch("operands from different fields");
    }
};

}  // namespace qtc

#endif
