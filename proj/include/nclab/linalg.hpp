#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nclab/gf.hpp"

namespace nclab {

// Dense matrix over a field context, row-major. Matrices are immutable values
// in spirit: every operation returns a fresh matrix. Element values are raw
// integers in [0, q); the context is checked once per operation, not per
// element.
class Mat {
public:
    Mat(const FieldCtx& F, size_t rows, size_t cols)
        : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(const FieldCtx& F, size_t n);
    static Mat of(const FieldCtx& F, std::initializer_list<std::initializer_list<uint32_t>> rows);

    const FieldCtx& ctx() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const std::vector<uint32_t>& data() const { return a_; }
    std::vector<uint32_t>& data() { return a_; }

    Mat row(size_t r) const;
    Mat submatrix(size_t r0, size_t r1, size_t c0, size_t c1) const;  // half-open ranges
    Mat transpose() const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.F_ == b.F_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::string to_text() const;
    static Mat from_text(const FieldCtx& F, const std::string& text);

private:
    const FieldCtx* F_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

Mat mat_pow(const Mat& m, uint64_t e);

size_t rank(const Mat& m);

struct Rref {
    Mat mat;                     // reduced row echelon form, zero rows removed
    std::vector<size_t> pivots;  // strictly increasing pivot columns
};
Rref rref(const Mat& m);

// Unique x with a*x = b; requires rank(a) == a.cols() and a consistent system.
Mat solve(const Mat& a, const Mat& b);

Mat hstack(const std::vector<Mat>& parts);
Mat vstack(const std::vector<Mat>& parts);
Mat block(const std::vector<std::vector<Mat>>& grid);

namespace detail {

// In-place row echelon over F on a row-major buffer; pivot search takes the
// first nonzero entry top-down (deterministic, no numerical concerns in exact
// fields). With reduce=true the result is the RREF and the nonzero rows end up
// in rows [0, pivots.size()).
std::vector<size_t> echelonize(const FieldCtx& F, uint32_t* a, size_t rows, size_t cols, bool reduce);

// rank of an externally assembled buffer, destroys it
inline size_t rank_inplace(const FieldCtx& F, uint32_t* a, size_t rows, size_t cols) {
    return echelonize(F, a, rows, cols, false).size();
}

// Incremental row-space tracker in reduced echelon form.
class RowBasis {
public:
    RowBasis(const FieldCtx& F, size_t cols) : F_(&F), cols_(cols), pivot_row_(cols, SIZE_MAX) {}

    size_t rank() const { return rows_.size(); }

    // reduces row against the basis; inserts and returns true if independent
    bool insert(std::vector<uint32_t> row) {
        for (size_t c = 0; c < cols_; ++c) {
            if (row[c] == 0 || pivot_row_[c] == SIZE_MAX) continue;
            uint32_t f = row[c];
            const auto& b = rows_[pivot_row_[c]];
            for (size_t j = c; j < cols_; ++j) row[j] = F_->sub(row[j], F_->mul(f, b[j]));
        }
        size_t p = 0;
        while (p < cols_ && row[p] == 0) ++p;
        if (p == cols_) return false;
        uint32_t inv = F_->inv(row[p]);
        if (inv != 1)
            for (size_t j = p; j < cols_; ++j) row[j] = F_->mul(row[j], inv);
        pivot_row_[p] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
    }

    bool insert_unit(size_t col) {
        std::vector<uint32_t> row(cols_, 0);
        row[col] = 1;
        return insert(std::move(row));
    }

private:
    const FieldCtx* F_;
    size_t cols_;
    std::vector<size_t> pivot_row_;
    std::vector<std::vector<uint32_t>> rows_;
};

}  // namespace detail

}  // namespace nclab
