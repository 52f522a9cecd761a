#include "qss/gflinalg.hpp"

#include <algorithm>

namespace qss {

namespace {

void require_nonnull(const FieldPtr& f) {
    if (!f) throw Error("null field");
}

// In-place reduced row echelon form on a row-major buffer. Pivot search is
// "first nonzero in column order". Returns the pivot column of each pivot row.
std::vector<size_t> rref(std::vector<uint32_t>& a, size_t rows, size_t cols, const Field& f) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
        }
        uint32_t piv_inv = f.inv(a[r * cols + c]);
        for (size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t factor = a[i * cols + c];
            if (factor == 0) continue;
            for (size_t j = c; j < cols; ++j) {
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

GFVector::GFVector(FieldPtr field, std::vector<uint32_t> values)
    : field_(std::move(field)), v_(std::move(values)) {
    require_nonnull(field_);
    for (uint32_t x : v_) field_->check_element(x);
}

GFVector GFVector::zeros(FieldPtr field, size_t len) {
    return GFVector(std::move(field), std::vector<uint32_t>(len, 0));
}

bool GFVector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](uint32_t x) { return x == 0; });
}

size_t GFVector::hamming_weight() const {
    return static_cast<size_t>(std::count_if(v_.begin(), v_.end(), [](uint32_t x) { return x != 0; }));
}

bool GFVector::operator==(const GFVector& o) const {
    return *field_ == *o.field_ && v_ == o.v_;
}

std::string GFVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v_[i]);
    }
    return out;
}

GFMatrix::GFMatrix(FieldPtr field, size_t rows, size_t cols, std::vector<uint32_t> row_major)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(row_major)) {
    require_nonnull(field_);
    if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
    if (a_.size() != rows_ * cols_) {
        throw DimensionMismatch("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                std::to_string(a_.size()));
    }
    for (uint32_t x : a_) field_->check_element(x);
}

GFMatrix GFMatrix::from_rows(FieldPtr field, const std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
    size_t cols = rows[0].size();
    std::vector<uint32_t> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged rows in matrix literal");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return GFMatrix(std::move(field), rows.size(), cols, std::move(flat));
}

GFMatrix GFMatrix::zeros(FieldPtr field, size_t rows, size_t cols) {
    return GFMatrix(std::move(field), rows, cols, std::vector<uint32_t>(rows * cols, 0));
}

GFMatrix GFMatrix::identity(FieldPtr field, size_t n) {
    std::vector<uint32_t> a(n * n, 0);
    for (size_t i = 0; i < n; ++i) a[i * n + i] = 1;
    return GFMatrix(std::move(field), n, n, std::move(a));
}

GFVector GFMatrix::row(size_t r) const {
    if (r >= rows_) throw IndexOutOfRange("row index out of range");
    return GFVector(field_, std::vector<uint32_t>(a_.begin() + static_cast<long>(r * cols_),
                                                  a_.begin() + static_cast<long>((r + 1) * cols_)));
}

bool GFMatrix::operator==(const GFMatrix& o) const {
    return *field_ == *o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string GFMatrix::to_string() const {
    std::string out;
    for (size_t r = 0; r < rows_; ++r) {
        if (r) out += "\n";
        for (size_t c = 0; c < cols_; ++c) {
            if (c) out += " ";
            out += std::to_string(at(r, c));
        }
    }
    return out;
}

GFVector encode_word(const GFVector& x, const GFMatrix& G) {
    require_same_field(*x.field(), *G.field());
    if (x.size() != G.rows()) {
        throw DimensionMismatch("message length " + std::to_string(x.size()) +
                                " != generator rows " + std::to_string(G.rows()));
    }
    const Field& f = *G.field();
    std::vector<uint32_t> out(G.cols(), 0);
    for (size_t i = 0; i < G.rows(); ++i) {
        uint32_t xi = x[i];
        if (xi == 0) continue;
        for (size_t j = 0; j < G.cols(); ++j) {
            out[j] = f.add(out[j], f.mul(xi, G.at(i, j)));
        }
    }
    return GFVector(G.field(), std::move(out));
}

GFVector mat_vec(const GFMatrix& M, const GFVector& v) {
    require_same_field(*M.field(), *v.field());
    if (v.size() != M.cols()) {
        throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != matrix cols " +
                                std::to_string(M.cols()));
    }
    const Field& f = *M.field();
    std::vector<uint32_t> out(M.rows(), 0);
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) {
            out[i] = f.add(out[i], f.mul(M.at(i, j), v[j]));
        }
    }
    return GFVector(M.field(), std::move(out));
}

size_t rank(const GFMatrix& M) {
    std::vector<uint32_t> a(M.entries().begin(), M.entries().end());
    return rref(a, M.rows(), M.cols(), *M.field()).size();
}

std::optional<GFVector> solve(const GFMatrix& M, const GFVector& rhs) {
    require_same_field(*M.field(), *rhs.field());
    if (rhs.size() != M.rows()) {
        throw DimensionMismatch("rhs length " + std::to_string(rhs.size()) + " != matrix rows " +
                                std::to_string(M.rows()));
    }
    const Field& f = *M.field();
    size_t rows = M.rows(), cols = M.cols();
    // eliminate on the augmented matrix, pivoting only in coefficient columns
    std::vector<uint32_t> a(rows * (cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) a[i * (cols + 1) + j] = M.at(i, j);
        a[i * (cols + 1) + cols] = rhs[i];
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * (cols + 1) + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (size_t j = 0; j <= cols; ++j) {
                std::swap(a[pr * (cols + 1) + j], a[r * (cols + 1) + j]);
            }
        }
        uint32_t piv_inv = f.inv(a[r * (cols + 1) + c]);
        for (size_t j = c; j <= cols; ++j) {
            a[r * (cols + 1) + j] = f.mul(a[r * (cols + 1) + j], piv_inv);
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t factor = a[i * (cols + 1) + c];
            if (factor == 0) continue;
            for (size_t j = c; j <= cols; ++j) {
                a[i * (cols + 1) + j] = f.sub(a[i * (cols + 1) + j],
                                              f.mul(factor, a[r * (cols + 1) + j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i) {
        if (a[i * (cols + 1) + cols] != 0) return std::nullopt;  // 0 = nonzero row
    }
    // canonical solution: pivot variables from the reduced rhs, free variables zero
    std::vector<uint32_t> z(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        z[pivots[i]] = a[i * (cols + 1) + cols];
    }
    return GFVector(M.field(), std::move(z));
}

GFMatrix select_columns(const GFMatrix& G, const std::vector<uint32_t>& cols) {
    if (cols.empty()) throw EmptySelection("column selection must be nonempty");
    std::vector<uint32_t> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= G.cols()) {
            throw IndexOutOfRange("column index " + std::to_string(sorted[i]) +
                                  " out of range [0, " + std::to_string(G.cols()) + ")");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw IndexOutOfRange("duplicate column index " + std::to_string(sorted[i]));
        }
    }
    std::vector<uint32_t> a;
    a.reserve(G.rows() * sorted.size());
    for (size_t r = 0; r < G.rows(); ++r) {
        for (uint32_t c : sorted) a.push_back(G.at(r, c));
    }
    return GFMatrix(G.field(), G.rows(), sorted.size(), std::move(a));
}

GFMatrix transpose(const GFMatrix& M) {
    std::vector<uint32_t> a(M.rows() * M.cols());
    for (size_t r = 0; r < M.rows(); ++r) {
        for (size_t c = 0; c < M.cols(); ++c) a[c * M.rows() + r] = M.at(r, c);
    }
    return GFMatrix(M.field(), M.cols(), M.rows(), std::move(a));
}

std::vector<GFVector> kernel_basis(const GFMatrix& M) {
    const Field& f = *M.field();
    std::vector<uint32_t> a(M.entries().begin(), M.entries().end());
    std::vector<size_t> pivots = rref(a, M.rows(), M.cols(), f);
    std::vector<bool> is_pivot(M.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<GFVector> basis;
    for (size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(M.cols(), 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = f.neg(a[i * M.cols() + free]);
        }
        basis.emplace_back(M.field(), std::move(v));
    }
    return basis;
}

}  // namespace qss
