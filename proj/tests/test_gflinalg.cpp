#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qss/gflinalg.hpp"
#include "qss/rng.hpp"

using namespace qss;

namespace {

GFMatrix random_matrix(const FieldPtr& f, size_t rows, size_t cols, Rng& rng) {
    std::vector<uint32_t> a(rows * cols);
    for (auto& x : a) x = static_cast<uint32_t>(rng.next_u64() % f->q());
    return GFMatrix(f, rows, cols, std::move(a));
}

GFVector random_vector(const FieldPtr& f, size_t len, Rng& rng) {
    std::vector<uint32_t> v(len);
    for (auto& x : v) x = static_cast<uint32_t>(rng.next_u64() % f->q());
    return GFVector(f, std::move(v));
}

std::vector<FieldPtr> test_fields() {
    return {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)};
}

}  // namespace

TEST_CASE("encode_word examples") {
    FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    GFMatrix rep(f2, 1, 3, {1, 1, 1});
    CHECK(encode_word(GFVector(f2, {1}), rep) == GFVector(f2, {1, 1, 1}));
    CHECK(encode_word(GFVector(f2, {0}), rep) == GFVector(f2, {0, 0, 0}));

    GFMatrix g3 = GFMatrix::from_rows(f3, {{1, 0, 1}, {0, 1, 1}});
    CHECK(encode_word(GFVector(f3, {1, 2}), g3) == GFVector(f3, {1, 2, 0}));

    CHECK_THROWS_AS(encode_word(GFVector(f2, {1, 0}), rep), DimensionMismatch);
    CHECK_THROWS_AS(encode_word(GFVector(f3, {1}), rep), FieldMismatch);
}

TEST_CASE("rank examples") {
    FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    CHECK(rank(GFMatrix(f2, 1, 3, {1, 1, 1})) == 1);
    CHECK(rank(GFMatrix::zeros(f3, 3, 4)) == 0);
    CHECK(rank(GFMatrix::from_rows(f3, {{1, 0, 1}, {0, 1, 1}})) == 2);
    CHECK(rank(GFMatrix::identity(f3, 4)) == 4);
    // second row is twice the first over F_3
    CHECK(rank(GFMatrix::from_rows(f3, {{1, 2, 0}, {2, 1, 0}})) == 1);
}

TEST_CASE("solve examples") {
    FieldPtr f2 = Field::make(2, 1);
    // 1x1 system z = rhs, the three-player correction equation
    for (uint32_t rhs : {0u, 1u}) {
        auto z = solve(GFMatrix(f2, 1, 1, {1}), GFVector(f2, {rhs}));
        REQUIRE(z.has_value());
        CHECK((*z)[0] == rhs);
    }
    // canonical solution zeroes the free variable
    auto z = solve(GFMatrix(f2, 1, 2, {1, 1}), GFVector(f2, {1}));
    REQUIRE(z.has_value());
    CHECK(*z == GFVector(f2, {1, 0}));
    CHECK(*solve(GFMatrix(f2, 1, 2, {1, 1}), GFVector(f2, {0})) == GFVector(f2, {0, 0}));

    // overdetermined and inconsistent: z = 1 and z = 0 cannot both hold
    CHECK(!solve(GFMatrix(f2, 2, 1, {1, 1}), GFVector(f2, {1, 0})).has_value());

    CHECK_THROWS_AS(solve(GFMatrix(f2, 2, 1, {1, 1}), GFVector(f2, {1})), DimensionMismatch);
}

TEST_CASE("select_columns examples") {
    FieldPtr f2 = Field::make(2, 1);
    GFMatrix rep(f2, 1, 3, {1, 1, 1});
    CHECK(select_columns(rep, {2}) == GFMatrix(f2, 1, 1, {1}));
    CHECK(select_columns(rep, {0, 1, 2}) == rep);
    CHECK(select_columns(rep, {0, 1}) == GFMatrix(f2, 1, 2, {1, 1}));

    GFMatrix g = GFMatrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}});
    CHECK(select_columns(g, {2}) == GFMatrix(f2, 2, 1, {1, 1}));

    CHECK_THROWS_AS(select_columns(rep, {}), EmptySelection);
    CHECK_THROWS_AS(select_columns(rep, {3}), IndexOutOfRange);
    CHECK_THROWS_AS(select_columns(rep, {1, 1}), IndexOutOfRange);
}

TEST_CASE("property: any returned solution satisfies the system") {
    Rng rng(1234);
    for (const FieldPtr& f : test_fields()) {
        for (int trial = 0; trial < 60; ++trial) {
            size_t rows = 1 + rng.next_u64() % 5, cols = 1 + rng.next_u64() % 6;
            GFMatrix M = random_matrix(f, rows, cols, rng);
            // half the trials get a guaranteed-consistent rhs
            GFVector rhs = trial % 2 == 0 ? mat_vec(M, random_vector(f, cols, rng))
                                          : random_vector(f, rows, rng);
            auto z = solve(M, rhs);
            if (z) {
                CHECK(mat_vec(M, *z) == rhs);
            }
            // NoSolution exactly when the augmented matrix gains rank
            std::vector<uint32_t> aug;
            for (size_t r = 0; r < rows; ++r) {
                for (size_t c = 0; c < cols; ++c) aug.push_back(M.at(r, c));
                aug.push_back(rhs[r]);
            }
            size_t aug_rank = rank(GFMatrix(f, rows, cols + 1, std::move(aug)));
            CHECK(z.has_value() == (aug_rank == rank(M)));
        }
    }
}

TEST_CASE("property: rank is invariant under row operations") {
    Rng rng(99);
    for (const FieldPtr& f : test_fields()) {
        for (int trial = 0; trial < 40; ++trial) {
            size_t rows = 2 + rng.next_u64() % 4, cols = 1 + rng.next_u64() % 6;
            GFMatrix M = random_matrix(f, rows, cols, rng);
            size_t r = rank(M);

            std::vector<uint32_t> a(M.entries().begin(), M.entries().end());
            size_t i = rng.next_u64() % rows, j = rng.next_u64() % rows;
            switch (trial % 3) {
                case 0:  // swap rows i and j
                    for (size_t c = 0; c < cols; ++c) std::swap(a[i * cols + c], a[j * cols + c]);
                    break;
                case 1: {  // scale row i by a nonzero element
                    uint32_t s = 1 + static_cast<uint32_t>(rng.next_u64() % (f->q() - 1));
                    for (size_t c = 0; c < cols; ++c) a[i * cols + c] = f->mul(s, a[i * cols + c]);
                    break;
                }
                default:  // add row j to row i
                    if (i == j) break;
                    for (size_t c = 0; c < cols; ++c) {
                        a[i * cols + c] = f->add(a[i * cols + c], a[j * cols + c]);
                    }
            }
            CHECK(rank(GFMatrix(f, rows, cols, std::move(a))) == r);
        }
    }
}

TEST_CASE("property: column selection cannot raise the rank") {
    Rng rng(7);
    for (const FieldPtr& f : test_fields()) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t rows = 1 + rng.next_u64() % 4, cols = 2 + rng.next_u64() % 5;
            GFMatrix M = random_matrix(f, rows, cols, rng);
            std::vector<uint32_t> sel;
            for (uint32_t c = 0; c < cols; ++c) {
                if (rng.next_u64() % 2) sel.push_back(c);
            }
            if (sel.empty()) sel.push_back(0);
            CHECK(rank(select_columns(M, sel)) <= rank(M));
        }
    }
}

TEST_CASE("kernel basis spans solutions of M v = 0") {
    Rng rng(5150);
    for (const FieldPtr& f : test_fields()) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t rows = 1 + rng.next_u64() % 4, cols = 1 + rng.next_u64() % 6;
            GFMatrix M = random_matrix(f, rows, cols, rng);
            auto basis = kernel_basis(M);
            CHECK(basis.size() == cols - rank(M));
            for (const auto& v : basis) {
                CHECK(mat_vec(M, v).is_zero());
            }
            CHECK(rank(transpose(M)) == rank(M));
        }
    }
}

TEST_CASE("text forms") {
    FieldPtr f3 = Field::make(3, 1);
    CHECK(GFVector(f3, {1, 2, 0}).to_string() == "1 2 0");
    CHECK(GFMatrix::from_rows(f3, {{1, 0}, {2, 1}}).to_string() == "1 0\n2 1");
}
