#include "qtc/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qtc {

struct Field::Data {
    unsigned q = 0;
    unsigned p = 0;  // characteristic
    unsigned e = 1;  // extension degree
    std::vector<unsigned> modulus;      // over GF(p), ascending; empty for e == 1
    std::vector<std::uint8_t> add_t;    // q*q
    std::vector<std::uint8_t> mul_t;    // q*q
    std::vector<std::uint8_t> neg_t;    // q
    std::vector<std::uint8_t> inv_t;    // q, entry 0 unused
};

namespace {

// --- polynomial helpers over the prime field GF(p), plain coefficient
// vectors in ascending degree, not normalized unless stated ---

void trim(std::vector<unsigned>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// remainder of a / b over GF(p); b must be nonzero (monic not required)
std::vector<unsigned> prem(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
    trim(a);
    // modular inverse of b's leading coefficient
    unsigned lead = b.back();
    unsigned lead_inv = 1;
    for (unsigned x = 1; x < p; ++x)
        if (lead * x % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size() && !a.empty()) {
        unsigned c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned sub = c * b[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible_prime_field(const std::vector<unsigned>& f, unsigned p) {
    std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // trial division by every monic polynomial of degree 1 .. deg/2
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        unsigned long long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long long idx = 0; idx < count; ++idx) {
            std::vector<unsigned> div(d + 1, 0);
            unsigned long long n = idx;
            for (std::size_t i = 0; i < d; ++i) { div[i] = unsigned(n % p); n /= p; }
            div[d] = 1;
            if (prem(f, div, p).empty()) return false;
        }
    }
    return true;
}

// canonical modulus: monic irreducible of degree e over GF(p) with the
// smallest integer encoding of its coefficient vector
std::vector<unsigned> canonical_modulus(unsigned p, unsigned e) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        std::vector<unsigned> f(e + 1, 0);
        unsigned long long n = idx;
        for (unsigned i = 0; i < e; ++i) { f[i] = unsigned(n % p); n /= p; }
        f[e] = 1;
        if (is_irreducible_prime_field(f, p)) return f;
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

std::vector<unsigned> enc_to_digits(unsigned enc, unsigned p, unsigned e) {
    std::vector<unsigned> d(e, 0);
    for (unsigned i = 0; i < e; ++i) { d[i] = enc % p; enc /= p; }
    return d;
}

unsigned digits_to_enc(const std::vector<unsigned>& d, unsigned p) {
    unsigned enc = 0;
    for (std::size_t i = d.size(); i-- > 0;) enc = enc * p + d[i];
    return enc;
}

std::shared_ptr<const Field::Data> build_field_data(unsigned q) {
    if (q < 2 || q > 256) throw NotPrimePower("q must be a prime power in [2, 256], got " + std::to_string(q));
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    unsigned rest = q;
    while (rest % p == 0) { rest /= p; ++e; }
    if (rest != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");

    auto d = std::make_shared<Field::Data>();
    d->q = q;
    d->p = p;
    d->e = e;
    if (e > 1) d->modulus = canonical_modulus(p, e);

    d->add_t.assign(std::size_t(q) * q, 0);
    d->mul_t.assign(std::size_t(q) * q, 0);
    d->neg_t.assign(q, 0);
    d->inv_t.assign(q, 0);

    for (unsigned a = 0; a < q; ++a) {
        auto da = enc_to_digits(a, p, e);
        for (unsigned b = 0; b < q; ++b) {
            auto db = enc_to_digits(b, p, e);
            // add
            std::vector<unsigned> s(e);
            for (unsigned i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            d->add_t[std::size_t(a) * q + b] = std::uint8_t(digits_to_enc(s, p));
            // mul: convolution reduced mod the modulus
            std::vector<unsigned> prod(2 * e - 1, 0);
            for (unsigned i = 0; i < e; ++i)
                for (unsigned j = 0; j < e; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            if (e > 1) prod = prem(std::move(prod), d->modulus, p);
            prod.resize(e, 0);
            d->mul_t[std::size_t(a) * q + b] = std::uint8_t(digits_to_enc(prod, p));
        }
        std::vector<unsigned> n(e);
        for (unsigned i = 0; i < e; ++i) n[i] = (p - da[i]) % p;
        d->neg_t[a] = std::uint8_t(digits_to_enc(n, p));
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (d->mul_t[std::size_t(a) * q + b] == 1) { d->inv_t[a] = std::uint8_t(b); break; }
    return d;
}

}  // namespace

Field make_field(unsigned q) {
    static std::mutex mtx;
    static std::map<unsigned, std::shared_ptr<const Field::Data>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build_field_data(q)).first;
    return Field(it->second);
}

unsigned Field::q() const { return data_->q; }
unsigned Field::characteristic() const { return data_->p; }
unsigned Field::ext_degree() const { return data_->e; }
const std::vector<unsigned>& Field::modulus() const { return data_->modulus; }

unsigned Field::add(unsigned a, unsigned b) const { return data_->add_t[std::size_t(a) * data_->q + b]; }
unsigned Field::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
unsigned Field::mul(unsigned a, unsigned b) const { return data_->mul_t[std::size_t(a) * data_->q + b]; }
unsigned Field::neg(unsigned a) const { return data_->neg_t[a]; }

unsigned Field::inv(unsigned a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(data_->q) + ")");
    return data_->inv_t[a];
}

unsigned Field::pow(unsigned a, unsigned long long e) const {
    unsigned r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

unsigned Field::element_order(unsigned a) const {
    if (a == 0) throw ZeroElement("order of zero is undefined");
    unsigned e = 1;
    unsigned x = a;
    while (x != 1) { x = mul(x, a); ++e; }
    return e;
}

unsigned Field::primitive_element() const {
    for (unsigned a = 1; a < data_->q; ++a)
        if (element_order(a) == data_->q - 1) return a;
    throw Error("no primitive element (unreachable)");
}

}  // namespace qtc
