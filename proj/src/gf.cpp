#include "qss/gf.hpp"

#include <algorithm>

namespace qss {

namespace {

// Dense polynomials over F_p, constant term first, trailing zeros allowed.
using Poly = std::vector<uint32_t>;

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[static_cast<size_t>(i)] != 0) return i;
    }
    return -1;  // zero polynomial
}

Poly poly_mul(const Poly& f, const Poly& g, uint32_t p) {
    if (degree(f) < 0 || degree(g) < 0) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) {
            out[i + j] = (out[i + j] + static_cast<uint64_t>(f[i]) * g[j]) % p;
        }
    }
    return out;
}

uint32_t int_inv_mod(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, t_next = 1, r = p, r_next = a % p;
    while (r_next != 0) {
        int64_t quot = r / r_next;
        int64_t t_tmp = t - quot * t_next;
        t = t_next;
        t_next = t_tmp;
        int64_t r_tmp = r - quot * r_next;
        r = r_next;
        r_next = r_tmp;
    }
    return static_cast<uint32_t>(((t % p) + p) % p);
}

// f mod g, g nonzero.
Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
    int dg = degree(g);
    uint32_t lead_inv = int_inv_mod(g[static_cast<size_t>(dg)], p);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        uint64_t c = (static_cast<uint64_t>(f[static_cast<size_t>(df)]) * lead_inv) % p;
        if (c != 0) {
            int shift = df - dg;
            for (int j = 0; j <= dg; ++j) {
                uint64_t sub = (c * g[static_cast<size_t>(j)]) % p;
                uint32_t& coef = f[static_cast<size_t>(j + shift)];
                coef = static_cast<uint32_t>((coef + p - sub) % p);
            }
        } else {
            f[static_cast<size_t>(df)] = 0;
        }
    }
    return f;
}

bool poly_is_zero(const Poly& f) { return degree(f) < 0; }

// Extended Euclid over F_p[x]: returns (g, s) with s*a = g (mod b),
// g = gcd(a, b). Only the a-cofactor is tracked.
std::pair<Poly, Poly> poly_half_egcd(Poly a, Poly b, uint32_t p) {
    Poly s{1}, s_prev{};  // s for a, s_prev for b
    Poly r = std::move(a), r_prev = std::move(b);
    // invariant: r = s * a (mod original b), r_prev = s_prev * a (mod original b)
    while (!poly_is_zero(r)) {
        // divide r_prev by r
        int dr = degree(r);
        uint32_t lead_inv = int_inv_mod(r[static_cast<size_t>(dr)], p);
        Poly quot(static_cast<size_t>(std::max(degree(r_prev) - dr + 1, 1)), 0);
        Poly rem = r_prev;
        for (int d = degree(rem); d >= dr; d = degree(rem)) {
            uint64_t c = (static_cast<uint64_t>(rem[static_cast<size_t>(d)]) * lead_inv) % p;
            quot[static_cast<size_t>(d - dr)] = static_cast<uint32_t>(c);
            for (int j = 0; j <= dr; ++j) {
                uint64_t sub = (c * r[static_cast<size_t>(j)]) % p;
                uint32_t& coef = rem[static_cast<size_t>(j + d - dr)];
                coef = static_cast<uint32_t>((coef + p - sub) % p);
            }
        }
        Poly qs = poly_mul(quot, s, p);
        Poly s_next = s_prev;
        s_next.resize(std::max(s_next.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) {
            s_next[i] = (s_next[i] + p - qs[i] % p) % p;
        }
        r_prev = std::move(r);
        r = std::move(rem);
        s_prev = std::move(s);
        s = std::move(s_next);
    }
    return {r_prev, s_prev};
}

struct BuiltinModulus {
    uint32_t p, m;
    std::vector<uint32_t> poly;
};

const std::vector<BuiltinModulus>& builtin_table() {
    static const std::vector<BuiltinModulus> table = {
        {2, 1, {0, 1}},
        {3, 1, {0, 1}},
        {5, 1, {0, 1}},
        {7, 1, {0, 1}},
        {2, 2, {1, 1, 1}},     // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
        {3, 2, {1, 0, 1}},     // x^2 + 1
    };
    return table;
}

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> poly)
    : p_(p), m_(m), poly_(std::move(poly)) {
    uint64_t q = checked_pow(p, m, uint64_t{1} << 16, "field order q=p^m");
    q_ = static_cast<uint32_t>(q);
}

FieldPtr Field::make(uint32_t p, uint32_t m) {
    for (const auto& e : builtin_table()) {
        if (e.p == p && e.m == m) return make(p, m, e.poly);
    }
    if (!is_prime(p)) {
        throw NonPrimeCharacteristic("p=" + std::to_string(p) + " is not prime");
    }
    throw NoBuiltinPolynomial("no built-in irreducible polynomial for GF(" + std::to_string(p) +
                              "^" + std::to_string(m) + "); pass one explicitly");
}

FieldPtr Field::make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) {
        throw NonPrimeCharacteristic("p=" + std::to_string(p) + " is not prime");
    }
    if (m < 1) throw Error("extension degree m must be >= 1");
    if (modulus.size() != m + 1) {
        throw Error("modulus must have exactly m+1 coefficients (constant term first)");
    }
    for (uint32_t c : modulus) {
        if (c >= p) throw Error("modulus coefficient " + std::to_string(c) + " not in [0, p)");
    }
    if (modulus[m] != 1) throw Error("modulus must be monic");

    Poly poly = modulus;
    if (m == 1) {
        // degree-1 moduli are all equivalent; normalize to the canonical x
        poly = {0, 1};
    } else {
        // trial division by every monic polynomial of degree 1..m/2
        for (uint32_t d = 1; 2 * d <= m; ++d) {
            uint64_t count = 1;
            for (uint32_t i = 0; i < d; ++i) count *= p;
            for (uint64_t c = 0; c < count; ++c) {
                Poly g(d + 1, 0);
                uint64_t t = c;
                for (uint32_t i = 0; i < d; ++i) {
                    g[i] = static_cast<uint32_t>(t % p);
                    t /= p;
                }
                g[d] = 1;
                if (poly_is_zero(poly_mod(poly, g, p))) {
                    throw ReduciblePolynomial("modulus has a monic factor of degree " +
                                              std::to_string(d));
                }
            }
        }
    }
    return FieldPtr(new Field(p, m, std::move(poly)));
}

void Field::check_element(uint32_t v) const {
    if (v >= q_) {
        throw IndexOutOfRange("element value " + std::to_string(v) + " not in [0, " +
                              std::to_string(q_) + ")");
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) return (a + b) % p_;
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    check_element(a);
    if (m_ == 1) return (p_ - a) % p_;
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);

    // schoolbook product of the coordinate polynomials, then reduction by the
    // monic modulus
    uint32_t da[16], db[16];
    uint64_t prod[31] = {0};
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = a % p_;
        db[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) {
            prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
        }
    }
    for (int i = 2 * static_cast<int>(m_) - 2; i >= static_cast<int>(m_); --i) {
        uint64_t c = prod[i] % p_;
        if (c == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) {
            // subtract c * modulus shifted by i - m
            prod[i - m_ + j] += c * ((p_ - poly_[j]) % p_);
        }
    }
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += static_cast<uint32_t>(prod[i] % p_) * place;
        place *= p_;
    }
    return out;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    check_element(a);
    uint32_t base = a, out = 1;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

uint32_t Field::inv(uint32_t a) const {
    check_element(a);
    if (a == 0) throw DivisionByZero("0 has no multiplicative inverse");
    if (m_ == 1) return int_inv_mod(a, p_);

    Poly pa(m_, 0);
    uint32_t t = a;
    for (uint32_t i = 0; i < m_; ++i) {
        pa[i] = t % p_;
        t /= p_;
    }
    auto [g, s] = poly_half_egcd(pa, poly_, p_);
    // modulus irreducible and deg(pa) < m, so the gcd is a nonzero constant
    uint32_t scale = int_inv_mod(g[0], p_);
    Poly r = poly_mod(std::move(s), poly_, p_);
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t c = i < r.size() ? r[i] : 0;
        out += static_cast<uint32_t>((static_cast<uint64_t>(c) * scale) % p_) * place;
        place *= p_;
    }
    return out;
}

uint32_t Field::trace(uint32_t a) const {
    check_element(a);
    uint32_t acc = a, term = a;
    for (uint32_t i = 1; i < m_; ++i) {
        term = pow(term, p_);
        acc = add(acc, term);
    }
    // the sum is Frobenius-fixed, hence a prime-subfield element
    if (acc >= p_) throw Error("trace left the prime subfield; field construction is broken");
    return acc;
}

bool Field::operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && poly_ == o.poly_;
}

std::string Field::to_string() const {
    std::string out = "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + "; poly=[";
    for (uint32_t i = 0; i <= m_; ++i) {
        if (i) out += ",";
        out += std::to_string(poly_[i]);
    }
    out += "])";
    return out;
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) {
        throw FieldMismatch("operands live in different fields: " + a.to_string() + " vs " +
                            b.to_string());
    }
}

FieldElement::FieldElement(uint32_t v, FieldPtr f) : value(v), field(std::move(f)) {
    if (!field) throw Error("FieldElement requires a field");
    field->check_element(value);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*field, *o.field);
    return {field->add(value, o.value), field};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*field, *o.field);
    return {field->sub(value, o.value), field};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*field, *o.field);
    return {field->mul(value, o.value), field};
}

FieldElement FieldElement::operator-() const { return {field->neg(value), field}; }

FieldElement FieldElement::inverse() const { return {field->inv(value), field}; }

FieldElement FieldElement::pow(uint64_t e) const { return {field->pow(value, e), field}; }

uint32_t FieldElement::trace() const { return field->trace(value); }

bool FieldElement::operator==(const FieldElement& o) const {
    return value == o.value && *field == *o.field;
}

}  // namespace qss
