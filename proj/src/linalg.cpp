#include "nclab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace nclab {

namespace detail {

std::vector<size_t> echelonize(const FieldCtx& F, uint32_t* a, size_t rows, size_t cols, bool reduce) {
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t sel = prow;
        while (sel < rows && a[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != prow) {
            for (size_t c = col; c < cols; ++c) std::swap(a[sel * cols + c], a[prow * cols + c]);
        }
        uint32_t pinv = F.inv(a[prow * cols + col]);
        if (pinv != 1) {
            for (size_t c = col; c < cols; ++c)
                a[prow * cols + c] = F.mul(a[prow * cols + c], pinv);
        }
        size_t lo = reduce ? 0 : prow + 1;
        for (size_t r = lo; r < rows; ++r) {
            if (r == prow) continue;
            uint32_t f = a[r * cols + col];
            if (f == 0) continue;
            for (size_t c = col; c < cols; ++c) {
                uint32_t t = F.mul(f, a[prow * cols + c]);
                a[r * cols + c] = F.sub(a[r * cols + c], t);
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

}  // namespace detail

Mat Mat::identity(const FieldCtx& F, size_t n) {
    Mat m(F, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::of(const FieldCtx& F, std::initializer_list<std::initializer_list<uint32_t>> rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.begin()->size();
    Mat m(F, r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("Mat::of: ragged rows");
        size_t j = 0;
        for (uint32_t v : row) {
            if (v >= F.order()) throw std::invalid_argument("Mat::of: value out of range");
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

Mat Mat::row(size_t r) const {
    Mat m(*F_, 1, cols_);
    std::copy_n(a_.begin() + r * cols_, cols_, m.a_.begin());
    return m;
}

Mat Mat::submatrix(size_t r0, size_t r1, size_t c0, size_t c1) const {
    if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
        throw std::invalid_argument("Mat::submatrix: bad range");
    Mat m(*F_, r1 - r0, c1 - c0);
    for (size_t r = r0; r < r1; ++r)
        for (size_t c = c0; c < c1; ++c) m(r - r0, c - c0) = (*this)(r, c);
    return m;
}

Mat Mat::transpose() const {
    Mat m(*F_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.F_ != b.F_) throw std::invalid_argument("Mat: context mismatch");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat: shape mismatch");
    Mat m(*a.F_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.F_->add(a.a_[i], b.a_[i]);
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.F_ != b.F_) throw std::invalid_argument("Mat: context mismatch");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat: shape mismatch");
    Mat m(*a.F_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.F_->sub(a.a_[i], b.a_[i]);
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.F_ != b.F_) throw std::invalid_argument("Mat: context mismatch");
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: inner dimension mismatch");
    const FieldCtx& F = *a.F_;
    Mat m(F, a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r) {
        for (size_t k = 0; k < a.cols_; ++k) {
            uint32_t f = a(r, k);
            if (f == 0) continue;
            for (size_t c = 0; c < b.cols_; ++c) {
                uint32_t t = F.mul(f, b(k, c));
                m(r, c) = F.add(m(r, c), t);
            }
        }
    }
    return m;
}

Mat mat_pow(const Mat& m, uint64_t e) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_pow: matrix not square");
    Mat acc = Mat::identity(m.ctx(), m.rows());
    for (uint64_t i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

size_t rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<uint32_t> buf(m.data());
    return detail::rank_inplace(m.ctx(), buf.data(), m.rows(), m.cols());
}

Rref rref(const Mat& m) {
    std::vector<uint32_t> buf(m.data());
    auto pivots = detail::echelonize(m.ctx(), buf.data(), m.rows(), m.cols(), true);
    Mat out(m.ctx(), pivots.size(), m.cols());
    std::copy_n(buf.begin(), pivots.size() * m.cols(), out.data().begin());
    return Rref{std::move(out), std::move(pivots)};
}

Mat solve(const Mat& a, const Mat& b) {
    if (&a.ctx() != &b.ctx()) throw std::invalid_argument("solve: context mismatch");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    if (a.rows() < a.cols()) throw std::invalid_argument("solve: system is underdetermined");
    const FieldCtx& F = a.ctx();
    size_t n = a.cols(), k = b.cols(), rows = a.rows(), cols = n + k;
    std::vector<uint32_t> aug(rows * cols);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < n; ++c) aug[r * cols + c] = a(r, c);
        for (size_t c = 0; c < k; ++c) aug[r * cols + n + c] = b(r, c);
    }
    auto pivots = detail::echelonize(F, aug.data(), rows, cols, true);
    size_t arank = 0;
    for (size_t p : pivots) {
        if (p < n)
            ++arank;
        else
            throw std::domain_error("solve: inconsistent system");
    }
    if (arank < n) throw std::domain_error("solve: rank deficient system");
    Mat x(F, n, k);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < k; ++c) x(r, c) = aug[r * cols + n + c];
    return x;
}

Mat hstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw std::invalid_argument("hstack: empty");
    const FieldCtx& F = parts[0].ctx();
    size_t rows = parts[0].rows(), cols = 0;
    for (const Mat& p : parts) {
        if (&p.ctx() != &F) throw std::invalid_argument("hstack: context mismatch");
        if (p.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
        cols += p.cols();
    }
    Mat m(F, rows, cols);
    size_t off = 0;
    for (const Mat& p : parts) {
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < p.cols(); ++c) m(r, off + c) = p(r, c);
        off += p.cols();
    }
    return m;
}

Mat vstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack: empty");
    const FieldCtx& F = parts[0].ctx();
    size_t cols = parts[0].cols(), rows = 0;
    for (const Mat& p : parts) {
        if (&p.ctx() != &F) throw std::invalid_argument("vstack: context mismatch");
        if (p.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
        rows += p.rows();
    }
    Mat m(F, rows, cols);
    size_t off = 0;
    for (const Mat& p : parts) {
        std::copy(p.data().begin(), p.data().end(), m.data().begin() + off * cols);
        off += p.rows();
    }
    return m;
}

Mat block(const std::vector<std::vector<Mat>>& grid) {
    if (grid.empty()) throw std::invalid_argument("block: empty");
    std::vector<Mat> rows;
    rows.reserve(grid.size());
    for (const auto& g : grid) rows.push_back(hstack(g));
    return vstack(rows);
}

std::string Mat::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << (*this)(r, c);
        }
        os << '\n';
    }
    return os.str();
}

Mat Mat::from_text(const FieldCtx& F, const std::string& text) {
    std::istringstream is(text);
    size_t rows, cols;
    if (!(is >> rows >> cols)) throw std::invalid_argument("Mat::from_text: bad header");
    Mat m(F, rows, cols);
    for (size_t i = 0; i < rows * cols; ++i) {
        uint64_t v;
        if (!(is >> v)) throw std::invalid_argument("Mat::from_text: not enough elements");
        if (v >= F.order()) throw std::invalid_argument("Mat::from_text: element out of range");
        m.a_[i] = static_cast<uint32_t>(v);
    }
    return m;
}

}  // namespace nclab
