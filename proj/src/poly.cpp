#include "qtc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qtc {

namespace {

void check_fields(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw FieldMismatch("polynomials over different fields");
}

std::vector<unsigned long long> prime_factors(unsigned long long n) {
    std::vector<unsigned long long> out;
    for (unsigned long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// a * b mod h, all over the same field, h monic
Polynomial mul_mod_poly(const Polynomial& a, const Polynomial& b, const Polynomial& h) {
    return poly_divrem(poly_mul(a, b), h).second;
}

}  // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    check_fields(a, b);
    const Field& f = a.field();
    std::vector<unsigned> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return {f, std::move(c)};
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    check_fields(a, b);
    const Field& f = a.field();
    std::vector<unsigned> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return {f, std::move(c)};
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    check_fields(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(f);
    std::vector<unsigned> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return {f, std::move(c)};
}

Polynomial poly_scale(const Polynomial& a, unsigned c) {
    const Field& f = a.field();
    std::vector<unsigned> v(a.coeffs());
    for (auto& x : v) x = f.mul(x, c);
    return {f, std::move(v)};
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& num, const Polynomial& den) {
    check_fields(num, den);
    const Field& f = num.field();
    if (den.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial::zero(f), num};
    std::vector<unsigned> rem(num.coeffs());
    std::vector<unsigned> quot(num.coeffs().size() - den.coeffs().size() + 1, 0);
    unsigned lead_inv = f.inv(den.coeffs().back());
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        unsigned c = f.mul(rem[shift + den.coeffs().size() - 1], lead_inv);
        if (c == 0) continue;
        quot[shift] = c;
        for (std::size_t j = 0; j < den.coeffs().size(); ++j)
            rem[shift + j] = f.sub(rem[shift + j], f.mul(c, den.coeffs()[j]));
    }
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = poly_divrem(num, den);
    if (!r.is_zero())
        throw NotDivisible("remainder nonzero in exact division", r.coeffs());
    return q;
}

Polynomial reduce_mod(const Polynomial& a, const QuotientRing& ring) {
    if (a.field() != ring.field) throw FieldMismatch("polynomial not over the ring's field");
    const Field& f = ring.field;
    std::vector<unsigned> c(a.coeffs());
    while (c.size() > ring.m) {
        std::size_t i = c.size() - 1;
        c[i - ring.m] = f.add(c[i - ring.m], f.mul(ring.lambda, c[i]));
        c.pop_back();
    }
    return {f, std::move(c)};
}

Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const QuotientRing& ring) {
    return reduce_mod(poly_mul(reduce_mod(a, ring), reduce_mod(b, ring)), ring);
}

Polynomial power_residue(const Polynomial& h, unsigned long long e) {
    if (!h.is_monic()) throw NotMonic("power_residue requires a monic modulus");
    const Field& f = h.field();
    Polynomial base = poly_divrem(Polynomial::x_pow(f, 1), h).second;
    Polynomial acc = Polynomial::one(f);
    while (e != 0) {
        if (e & 1) acc = mul_mod_poly(acc, base, h);
        base = mul_mod_poly(base, base, h);
        e >>= 1;
    }
    return acc;
}

bool is_primitive(const Polynomial& h, unsigned t) {
    if (!h.is_monic()) throw NotMonic("primitivity test requires a monic polynomial");
    if (t < 1 || h.degree() != int(t)) throw BadDegree("degree mismatch in primitivity test");
    const Field& f = h.field();
    unsigned q = f.q();
    if (h.coeff(0) == 0) return false;  // x divides h, or h == x
    // irreducibility by trial division up to degree t/2
    if (t >= 2) {
        for (unsigned d = 1; 2 * d <= t; ++d) {
            unsigned long long count = 1;
            for (unsigned i = 0; i < d; ++i) count *= q;
            for (unsigned long long idx = 0; idx < count; ++idx) {
                std::vector<unsigned> v(d + 1, 0);
                unsigned long long n = idx;
                for (unsigned i = 0; i < d; ++i) { v[i] = unsigned(n % q); n /= q; }
                v[d] = 1;
                if (poly_divrem(h, Polynomial(f, std::move(v))).second.is_zero()) return false;
            }
        }
    }
    // order of x mod h must be exactly q^t - 1
    unsigned long long order = 1;
    for (unsigned i = 0; i < t; ++i) order *= q;
    order -= 1;
    if (power_residue(h, order) != Polynomial::one(f)) return false;
    for (auto ell : prime_factors(order))
        if (power_residue(h, order / ell) == Polynomial::one(f)) return false;
    return true;
}

Polynomial find_primitive_poly(const Field& f, unsigned t) {
    unsigned q = f.q();
    unsigned long long count = 1;
    for (unsigned i = 0; i < t; ++i) count *= q;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        std::vector<unsigned> v(t + 1, 0);
        unsigned long long n = idx;
        for (unsigned i = 0; i < t; ++i) { v[i] = unsigned(n % q); n /= q; }
        v[t] = 1;
        Polynomial h(f, std::move(v));
        if (is_primitive(h, t)) return h;
    }
    throw Error("no primitive polynomial found (unreachable)");
}

std::string poly_to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ',';
        os << p.coeffs()[i];
    }
    return os.str();
}

Polynomial poly_from_signed(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<unsigned> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) {
        long long a = c < 0 ? -c : c;
        if (a >= f.q())
            throw ParseError("coefficient " + std::to_string(c) + " out of range for GF(" +
                             std::to_string(f.q()) + ")");
        v.push_back(c < 0 ? f.neg(unsigned(a)) : unsigned(a));
    }
    return {f, std::move(v)};
}

Polynomial poly_from_text(const Field& f, const std::string& text) {
    std::vector<long long> coeffs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw ParseError("bad coefficient '" + tok + "'");
            coeffs.push_back(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad coefficient '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("coefficient out of range '" + tok + "'");
        }
    }
    if (coeffs.empty()) throw ParseError("empty polynomial text");
    return poly_from_signed(f, coeffs);
}

}  // namespace qtc
