#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "lcskt/errors.hpp"

namespace lcskt {

template <class F>
bool is_zero_elem(const F& x) {
    return x == F(0);
}

// Dense matrix over an exact field F (Rat, Scalar, Root2).  Everything is
// fraction-free-correct by construction: plain Gauss-Jordan over a field.
// Sizes here never exceed a few dozen rows, so no pivoting strategy is needed.
template <class F>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const F& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& a = (*this)(i, k);
                if (is_zero_elem(a)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    Mat scaled(const F& c) const {
        Mat r = *this;
        for (auto& x : r.data_) x = x * c;
        return r;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        assert(static_cast<int>(x.size()) == cols_);
        std::vector<F> y(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero_elem((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!is_zero_elem(x)) return false;
        return true;
    }

    // Row-reduces in place; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!is_zero_elem((*this)(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            F inv = F(1) / (*this)(row, col);
            for (int j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || is_zero_elem((*this)(i, col))) continue;
                F c = (*this)(i, col);
                for (int j = col; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - c * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Mat m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Canonical null-space basis from the reduced echelon form, one vector per
    // free column.
    std::vector<std::vector<F>> kernel() const {
        Mat m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<F> v(cols_, F(0));
            v[free] = F(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    F det() const {
        assert(rows_ == cols_);
        Mat m = *this;
        F d(1);
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int i = col; i < rows_; ++i)
                if (!is_zero_elem(m(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) return F(0);
            if (p != col) {
                for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(col, j));
                d = -d;
            }
            d = d * m(col, col);
            F inv = F(1) / m(col, col);
            for (int i = col + 1; i < rows_; ++i) {
                if (is_zero_elem(m(i, col))) continue;
                F c = m(i, col) * inv;
                for (int j = col; j < cols_; ++j) m(i, j) = m(i, j) - c * m(col, j);
            }
        }
        return d;
    }

    std::optional<Mat> inverse() const {
        assert(rows_ == cols_);
        Mat aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = F(1);
        }
        std::vector<int> pivots = aug.rref();
        if (static_cast<int>(pivots.size()) < rows_ || pivots[rows_ - 1] >= cols_) return std::nullopt;
        Mat inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

  private:
    int rows_, cols_;
    std::vector<F> data_;
};

// Full solution set of A x = b: a particular solution plus a canonical kernel
// basis, or nullopt when inconsistent.
template <class F>
struct AffineSolution {
    std::vector<F> particular;
    std::vector<std::vector<F>> kernel_basis;
};

template <class F>
std::optional<AffineSolution<F>> solve_affine(const Mat<F>& A, const std::vector<F>& b) {
    assert(static_cast<int>(b.size()) == A.rows());
    Mat<F> aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // row (0..0 | 1)
    AffineSolution<F> sol;
    sol.particular.assign(A.cols(), F(0));
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(static_cast<int>(r), A.cols());
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(A.cols(), F(0));
        v[free] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(static_cast<int>(r), free);
        sol.kernel_basis.push_back(std::move(v));
    }
    return sol;
}

}  // namespace lcskt
