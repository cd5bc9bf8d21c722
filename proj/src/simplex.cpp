#include "qtc/simplex.hpp"

#include <algorithm>

namespace qtc {

namespace {

unsigned pow_u(unsigned q, unsigned t) {
    unsigned r = 1;
    while (t--) r *= q;
    return r;
}

Polynomial x_m_minus_lambda(const Field& f, unsigned m, unsigned lambda) {
    std::vector<unsigned> v(m + 1, 0);
    v[0] = f.neg(lambda);
    v[m] = 1;
    return {f, std::move(v)};
}

// all nonzero weights of the code spanned by the rows of gen equal `w`?
bool equidistant_weight(const Matrix& gen, unsigned w) {
    const Field& f = gen.field();
    unsigned q = f.q();
    std::size_t k = gen.n_rows(), n = gen.n_cols();
    std::vector<unsigned> msg(k, 0), word(n, 0);
    unsigned long long total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    for (unsigned long long it = 1; it < total; ++it) {
        // odometer step; update word by delta * row
        std::size_t pos = 0;
        while (true) {
            unsigned old = msg[pos];
            unsigned next = (old + 1) % q;
            msg[pos] = next;
            unsigned delta = f.sub(next, old);
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j], f.mul(delta, gen.at(pos, j)));
            if (next != 0) break;
            ++pos;
        }
        unsigned weight = 0;
        for (unsigned x : word) weight += (x != 0);
        if (weight != w) return false;
    }
    return true;
}

}  // namespace

SimplexCode build_simplex(const Field& f, unsigned t, std::optional<Polynomial> h_opt) {
    if (t < 2) throw BadDegree("simplex construction requires t > 1");
    Polynomial h = h_opt ? *h_opt : find_primitive_poly(f, t);
    if (h.field() != f) throw FieldMismatch("h is over a different field");
    if (h.degree() != int(t)) throw BadDegree("h must have degree t");
    if (!is_primitive(h, t)) throw NotPrimitive("h is not primitive: " + poly_to_text(h));

    unsigned q = f.q();
    unsigned m = (pow_u(q, t) - 1) / (q - 1);
    Polynomial lam = power_residue(h, m);
    // x^m mod h is a constant: its (q-1)-th power is x^(q^t-1) = 1
    if (lam.degree() > 0) throw Error("x^m mod h is not constant (broken primitivity)");
    unsigned lambda = lam.coeff(0);
    if (f.element_order(lambda) != q - 1)
        throw Error("derived lambda does not have order q-1");

    Polynomial g = exact_div(x_m_minus_lambda(f, m, lambda), h);
    return {f, t, m, lambda, std::move(h), std::move(g), QuotientRing(f, m, lambda)};
}

SimplexCode simplex_from_explicit_g(const Field& f, unsigned m, unsigned lambda,
                                    const Polynomial& g) {
    if (lambda == 0 || lambda >= f.q()) throw BadInput("lambda must be a nonzero element");
    if (g.is_zero() || g.degree() >= int(m)) throw BadDegree("g must have degree < m");
    unsigned t = m - unsigned(g.degree());

    Polynomial h(f, {});
    try {
        h = exact_div(x_m_minus_lambda(f, m, lambda), g);
    } catch (const NotDivisible&) {
        throw NotDivisor("g does not divide x^m - lambda");
    }
    if (t < 2) throw BadDegree("dimension m - deg(g) must exceed 1");

    SimplexCode code{f, t, m, lambda, std::move(h), g, QuotientRing(f, m, lambda)};
    unsigned w = pow_u(f.q(), t - 1);
    if (!equidistant_weight(simplex_generator(code), w))
        throw NotSimplex("code generated by g is not equidistant with weight q^{t-1}");
    return code;
}

Matrix simplex_generator(const SimplexCode& s) {
    Matrix gen(s.field, s.t, s.m);
    for (unsigned j = 0; j < s.t; ++j) {
        // deg(x^j g) = j + m - t < m, no reduction needed
        auto row = poly_mul(Polynomial::x_pow(s.field, j), s.g).coeffs();
        row.resize(s.m, 0);
        gen.set_row(j, row);
    }
    return gen;
}

std::vector<Polynomial> codeword_polys(const SimplexCode& s) {
    std::vector<Polynomial> out;
    out.reserve(std::size_t(s.field.q()) * s.m);
    for (unsigned a = 1; a < s.field.q(); ++a)
        for (unsigned j = 0; j < s.m; ++j)
            out.push_back(reduce_mod(poly_scale(poly_mul(Polynomial::x_pow(s.field, j), s.g), a),
                                     s.ring));
    return out;
}

}  // namespace qtc
