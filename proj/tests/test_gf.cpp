#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qss/gf.hpp"

using namespace qss;

namespace {

// Every field of order <= 64 that the suites exercise. For the ones beyond
// the built-in table the modulus is supplied explicitly (all standard
// irreducible polynomials, checked again at construction).
std::vector<FieldPtr> fields_up_to_64() {
    return {
        Field::make(2, 1),
        Field::make(3, 1),
        Field::make(5, 1),
        Field::make(7, 1),
        Field::make(11, 1, {0, 1}),
        Field::make(13, 1, {0, 1}),
        Field::make(31, 1, {0, 1}),
        Field::make(61, 1, {0, 1}),
        Field::make(2, 2),                          // x^2+x+1
        Field::make(2, 3),                          // x^3+x+1
        Field::make(3, 2),                          // x^2+1
        Field::make(2, 4, {1, 1, 0, 0, 1}),         // x^4+x+1
        Field::make(5, 2, {2, 0, 1}),               // x^2+2
        Field::make(3, 3, {1, 2, 0, 1}),            // x^3+2x+1
        Field::make(2, 5, {1, 0, 1, 0, 0, 1}),      // x^5+x^2+1
        Field::make(7, 2, {1, 0, 1}),               // x^2+1
        Field::make(2, 6, {1, 1, 0, 0, 0, 0, 1}),   // x^6+x+1
    };
}

}  // namespace

TEST_CASE("construction: built-in table and placeholders") {
    FieldPtr f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<uint32_t>{0, 1});
    CHECK(f2->to_string() == "GF(2^1; poly=[0,1])");

    FieldPtr f4 = Field::make(2, 2);
    CHECK(f4->q() == 4);
    CHECK(f4->to_string() == "GF(2^2; poly=[1,1,1])");

    // any monic degree-1 modulus collapses to the canonical placeholder x
    FieldPtr f5 = Field::make(5, 1, {3, 1});
    CHECK(f5->modulus() == std::vector<uint32_t>{0, 1});
    CHECK(*f5 == *Field::make(5, 1));
}

TEST_CASE("construction: rejects") {
    CHECK_THROWS_AS(Field::make(4, 1, {0, 1}), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::make(6, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::make(1, 1, {0, 1}), NonPrimeCharacteristic);
    // x^2+1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), ReduciblePolynomial);
    // x^2 = x*x
    CHECK_THROWS_AS(Field::make(3, 2, {0, 0, 1}), ReduciblePolynomial);
    CHECK_THROWS_AS(Field::make(2, 4), NoBuiltinPolynomial);
    CHECK_THROWS_AS(Field::make(11, 1), NoBuiltinPolynomial);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), Error);        // wrong length
    CHECK_THROWS_AS(Field::make(3, 2, {1, 0, 2}), Error);     // not monic
    CHECK_THROWS_AS(Field::make(2, 17, {0, 1}), Error);       // q > 2^16
}

TEST_CASE("addition examples") {
    FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1), f4 = Field::make(2, 2);
    CHECK(f2->add(1, 1) == 0);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f4->add(2, 2) == 0);  // alpha + alpha, characteristic 2
}

TEST_CASE("multiplication examples") {
    FieldPtr f3 = Field::make(3, 1), f4 = Field::make(2, 2);
    // alpha^2 = alpha + 1 under x^2+x+1; alpha encodes as 2, alpha+1 as 3
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f3->mul(2, 2) == 1);
    for (uint32_t a = 0; a < 4; ++a) CHECK(f4->mul(0, a) == 0);
}

TEST_CASE("inverse examples") {
    FieldPtr f4 = Field::make(2, 2);
    CHECK(f4->inv(1) == 1);
    CHECK(f4->inv(2) == 3);  // alpha * (alpha+1) = alpha^2 + alpha = 1
    CHECK_THROWS_AS(f4->inv(0), DivisionByZero);
}

TEST_CASE("trace examples") {
    FieldPtr f5 = Field::make(5, 1);
    for (uint32_t x = 0; x < 5; ++x) CHECK(f5->trace(x) == x);  // m=1: identity

    FieldPtr f4 = Field::make(2, 2);
    CHECK(f4->trace(0) == 0);
    CHECK(f4->trace(1) == 0);  // 1 + 1^2 = 0 in characteristic 2
    CHECK(f4->trace(2) == 1);  // alpha + alpha^2 = alpha + alpha + 1 = 1
    CHECK(f4->trace(3) == 1);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (const FieldPtr& f : fields_up_to_64()) {
        const uint32_t q = f->q();
        INFO(f->to_string());
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
            }
        }
        for (uint32_t a = 0; a < q; ++a) {
            for (uint32_t b = 0; b < q; ++b) {
                for (uint32_t c = 0; c < q; ++c) {
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("trace is F_p-linear, surjective, with fibers of size q/p") {
    for (const FieldPtr& f : fields_up_to_64()) {
        const uint32_t q = f->q(), p = f->p();
        INFO(f->to_string());
        std::vector<uint32_t> fiber(p, 0);
        for (uint32_t x = 0; x < q; ++x) {
            uint32_t tx = f->trace(x);
            REQUIRE(tx < p);
            ++fiber[tx];
            for (uint32_t y = 0; y < q; ++y) {
                REQUIRE(f->trace(f->add(x, y)) == (f->trace(x) + f->trace(y)) % p);
            }
            for (uint32_t c = 0; c < p; ++c) {
                // prime-subfield elements are the values < p
                REQUIRE(f->trace(f->mul(c, x)) == (c * tx) % p);
            }
        }
        for (uint32_t t = 0; t < p; ++t) CHECK(fiber[t] == q / p);
    }
}

TEST_CASE("inverse via extended Euclid equals a^(q-2)") {
    for (const FieldPtr& f : fields_up_to_64()) {
        INFO(f->to_string());
        for (uint32_t a = 1; a < f->q(); ++a) {
            CHECK(f->inv(a) == f->pow(a, f->q() - 2));
        }
    }
}

TEST_CASE("FieldElement guards against mixed fields") {
    FieldElement a(1, Field::make(2, 1));
    FieldElement b(1, Field::make(3, 1));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);

    // same parameters, distinct Field objects: interoperable
    FieldElement c(1, Field::make(2, 1));
    CHECK((a + c).value == 0);
    CHECK_THROWS_AS(FieldElement(4, Field::make(2, 2)), IndexOutOfRange);
}
