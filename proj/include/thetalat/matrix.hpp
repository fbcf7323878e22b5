#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "thetalat/rational.hpp"

namespace thetalat {

// dense row-major matrix
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0)
            throw std::invalid_argument("matrix: negative dimension");
    }

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!(x == T(0)))
                return false;
        return true;
    }

    Mat transposed() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rational>;
using GaussMat = Mat<Gaussian>;

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix add: shape mismatch");
    Mat<T> m(x.rows, x.cols);
    for (size_t k = 0; k < x.a.size(); ++k)
        m.a[k] = x.a[k] + y.a[k];
    return m;
}

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix mul: shape mismatch");
    Mat<T> m(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& xik = x(i, k);
            if (xik == T(0))
                continue;
            for (int j = 0; j < y.cols; ++j)
                m(i, j) = m(i, j) + xik * y(k, j);
        }
    return m;
}

template <class T>
Mat<T> scaled(const Mat<T>& x, const T& c) {
    Mat<T> m(x.rows, x.cols);
    for (size_t k = 0; k < x.a.size(); ++k)
        m.a[k] = x.a[k] * c;
    return m;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("matrix-vector: shape mismatch");
    std::vector<T> r(m.rows, T(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[i] = r[i] + m(i, j) * v[j];
    return r;
}

IntMat to_int_mat(const RatMat& m);  // throws if any entry is non-integral
RatMat to_rat_mat(const IntMat& m);

// exact determinant of a square integer matrix (fraction-free elimination)
Int det_int(const IntMat& m);

Rational det_rat(const RatMat& m);

int rank_rat(RatMat m);

// basis of the right kernel { v : M v = 0 } over the rationals
std::vector<RatVec> kernel_basis(const RatMat& m);

// inverse of a matrix with determinant +-1; throws otherwise
IntMat inverse_unimodular(const IntMat& m);

// true iff span_Q(vs) contains v (vectors given as rows of equal length)
bool in_span(const std::vector<RatVec>& vs, const RatVec& v);

// true iff the two families span the same Q-subspace
bool same_span(const std::vector<RatVec>& xs, const std::vector<RatVec>& ys, int dim);

}  // namespace thetalat
