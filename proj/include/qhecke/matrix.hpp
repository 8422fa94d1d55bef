// Dense matrices over an exact field (Rational or ScalarQ): arithmetic,
// Gaussian elimination, rank, linear solves, characteristic polynomials.
// Sizes stay in the hundreds; clarity over blocking tricks.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace qhecke {

template <class F>
class Mat {
  public:
    int rows = 0, cols = 0;
    std::vector<F> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, RingTraits<F>::zero()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = RingTraits<F>::one();
        return m;
    }

    F& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const F& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (const F& x : a)
            if (!RingTraits<F>::is_zero(x)) return false;
        return true;
    }
    bool is_scalar(const F& s) const {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const F& want = (i == j) ? s : RingTraits<F>::zero();
                if ((*this)(i, j) != want) return false;
            }
        return true;
    }

    Mat& operator+=(const Mat& o) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }
    friend Mat operator+(Mat x, const Mat& y) { return x += y; }
    friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
    Mat& operator*=(const F& s) {
        for (F& x : a) x = x * s;
        return *this;
    }
    friend Mat operator*(const F& s, Mat x) { return x *= s; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const F& v = x(i, k);
                if (RingTraits<F>::is_zero(v)) continue;
                for (int j = 0; j < y.cols; ++j) {
                    const F& w = y(k, j);
                    if (!RingTraits<F>::is_zero(w)) r(i, j) += v * w;
                }
            }
        return r;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> r(rows, RingTraits<F>::zero());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!RingTraits<F>::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    F trace() const {
        F t = RingTraits<F>::zero();
        for (int i = 0; i < rows && i < cols; ++i) t += (*this)(i, i);
        return t;
    }

    // in-place reduced row echelon; returns pivot columns
    std::vector<int> rref() {
        std::vector<int> pivots;
        int pr = 0;
        for (int c = 0; c < cols && pr < rows; ++c) {
            int sel = -1;
            for (int r = pr; r < rows; ++r)
                if (!RingTraits<F>::is_zero((*this)(r, c))) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            for (int j = 0; j < cols; ++j) std::swap((*this)(sel, j), (*this)(pr, j));
            F inv = RingTraits<F>::one() / (*this)(pr, c);
            for (int j = c; j < cols; ++j) (*this)(pr, j) = (*this)(pr, j) * inv;
            for (int r = 0; r < rows; ++r) {
                if (r == pr || RingTraits<F>::is_zero((*this)(r, c))) continue;
                F f = (*this)(r, c);
                for (int j = c; j < cols; ++j) (*this)(r, j) -= f * (*this)(pr, j);
            }
            pivots.push_back(c);
            ++pr;
        }
        return pivots;
    }

    int rank() const {
        Mat copy = *this;
        return static_cast<int>(copy.rref().size());
    }

    // solve A x = b; nullopt if inconsistent, least-pivot solution otherwise
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        Mat aug(rows, cols + 1);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols) = b[i];
        }
        auto piv = aug.rref();
        if (!piv.empty() && piv.back() == cols) return std::nullopt;
        std::vector<F> x(cols, RingTraits<F>::zero());
        for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), cols);
        return x;
    }

    Mat inverse() const {
        if (rows != cols) throw std::invalid_argument("inverse of non-square matrix");
        Mat aug(rows, 2 * cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols + i) = RingTraits<F>::one();
        }
        auto piv = aug.rref();
        if (static_cast<int>(piv.size()) != rows || piv.back() != rows - 1)
            throw std::domain_error("singular matrix");
        Mat inv(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) inv(i, j) = aug(i, cols + j);
        return inv;
    }

    // Faddeev-LeVerrier; divisions are by integers only
    Laurent<F> charpoly() const {
        if (rows != cols) throw std::invalid_argument("charpoly of non-square matrix");
        int n = rows;
        std::vector<F> coef(n + 1, RingTraits<F>::zero());
        coef[n] = RingTraits<F>::one();
        Mat Mk = Mat::identity(n);
        for (int k = 1; k <= n; ++k) {
            Mk = (*this) * Mk;
            F t = Mk.trace();
            F ck = RingTraits<F>::zero() - t * RingTraits<F>::from_rational(Rational(1, k));
            coef[n - k] = ck;
            for (int i = 0; i < n; ++i) Mk(i, i) += ck;
        }
        Laurent<F> out;
        for (int i = 0; i <= n; ++i) out.add_term(i, coef[i]);
        return out;
    }
};

using MatQ = Mat<Rational>;

template <class F>
F det_via_charpoly(const Mat<F>& m) {
    auto p = m.charpoly();
    F c0 = p.coeff(0);
    if (m.rows % 2) return RingTraits<F>::zero() - c0;
    return c0;
}

}  // namespace qhecke
