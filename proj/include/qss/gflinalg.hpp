#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qss/gf.hpp"

namespace qss {

/*
 * Dense vectors and matrices over GF(q). Entries are raw element values in
 * [0, q) sharing one Field; mixed-field operations throw FieldMismatch.
 * Everything here is pure and uses exact arithmetic, so Gaussian elimination
 * pivots on the first nonzero entry with no numerical concerns.
 */
class GFVector {
  public:
    GFVector(FieldPtr field, std::vector<uint32_t> values);
    static GFVector zeros(FieldPtr field, size_t len);

    size_t size() const { return v_.size(); }
    uint32_t operator[](size_t i) const { return v_[i]; }
    const FieldPtr& field() const { return field_; }
    std::span<const uint32_t> values() const { return v_; }

    bool is_zero() const;
    size_t hamming_weight() const;

    bool operator==(const GFVector& o) const;
    bool operator!=(const GFVector& o) const { return !(*this == o); }

    std::string to_string() const;  // whitespace-separated element values

  private:
    FieldPtr field_;
    std::vector<uint32_t> v_;
};

class GFMatrix {
  public:
    GFMatrix(FieldPtr field, size_t rows, size_t cols, std::vector<uint32_t> row_major);
    static GFMatrix from_rows(FieldPtr field, const std::vector<std::vector<uint32_t>>& rows);
    static GFMatrix zeros(FieldPtr field, size_t rows, size_t cols);
    static GFMatrix identity(FieldPtr field, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    const FieldPtr& field() const { return field_; }
    std::span<const uint32_t> entries() const { return a_; }

    GFVector row(size_t r) const;
    bool operator==(const GFMatrix& o) const;

    std::string to_string() const;  // one line per row

  private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

// Row-vector times matrix: x (1xk) . G (kxn) -> (1xn).
GFVector encode_word(const GFVector& x, const GFMatrix& G);

// Matrix times column vector: M (rxc) . v^T (cx1) -> (rx1).
GFVector mat_vec(const GFMatrix& M, const GFVector& v);

// Row rank by Gaussian elimination (equals column rank).
size_t rank(const GFMatrix& M);

// A solution z of M . z^T = rhs with all free variables set to zero, or
// nullopt when the system is inconsistent.
std::optional<GFVector> solve(const GFMatrix& M, const GFVector& rhs);

// Submatrix keeping exactly the columns indexed by `cols` (0-based,
// ascending). Throws EmptySelection / IndexOutOfRange.
GFMatrix select_columns(const GFMatrix& G, const std::vector<uint32_t>& cols);

GFMatrix transpose(const GFMatrix& M);

// Basis of the right kernel {v : M . v^T = 0}; size cols - rank(M).
std::vector<GFVector> kernel_basis(const GFMatrix& M);

}  // namespace qss
