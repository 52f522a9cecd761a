#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qss/common.hpp"

namespace qss {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/*
 * Exact arithmetic in GF(q), q = p^m, with the polynomial-basis representation.
 *
 * An element is an integer in [0, q) whose base-p digits are its coordinates
 * in the basis {1, a, a^2, ..., a^(m-1)}, where a is a root of the monic
 * irreducible modulus polynomial (coefficients stored constant term first).
 * For m = 1 the modulus is the canonical placeholder x and arithmetic is
 * plain integers mod p.
 *
 * Fields are immutable once constructed; all operations are pure.
 */
class Field {
  public:
    // Uses the built-in modulus table; covers (p,m) in
    // {(2,1),(3,1),(5,1),(7,1),(2,2),(2,3),(3,2)}. Throws NoBuiltinPolynomial
    // for other pairs.
    static FieldPtr make(uint32_t p, uint32_t m);

    // Explicit modulus: m+1 coefficients, constant first, monic, irreducible
    // over F_p (checked by trial division). Throws NonPrimeCharacteristic or
    // ReduciblePolynomial on bad input.
    static FieldPtr make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return poly_; }

    // Element operations on raw values in [0, q).
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // extended Euclid; DivisionByZero on a = 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    // Field trace GF(q) -> F_p: sum of a^(p^i) for i in [0, m). The sum lands
    // in the prime subfield, so the result is an integer in [0, p).
    uint32_t trace(uint32_t a) const;

    // Equality is by value (same p, m, modulus); elements of two Field
    // instances that compare equal are interoperable.
    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // "GF(p^m; poly=[c0,c1,...,cm])"
    std::string to_string() const;

    // Throws IndexOutOfRange unless v < q.
    void check_element(uint32_t v) const;

  private:
    Field(uint32_t p, uint32_t m, std::vector<uint32_t> poly);

    uint32_t p_, m_, q_;
    std::vector<uint32_t> poly_;
};

// Throws FieldMismatch unless the two fields compare equal by value.
void require_same_field(const Field& a, const Field& b);

/*
 * A checked scalar: value plus the field it lives in. Mixed-field operands
 * throw FieldMismatch. Vectors and matrices store raw values with one shared
 * field instead; this type is for scalar work and the Python surface.
 */
struct FieldElement {
    uint32_t value = 0;
    FieldPtr field;

    FieldElement() = default;
    FieldElement(uint32_t v, FieldPtr f);

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    uint32_t trace() const;

    bool operator==(const FieldElement& o) const;
    std::string to_string() const { return std::to_string(value); }
};

}  // namespace qss
