#include "thetalat/matrix.hpp"

#include <cassert>
#include <sstream>

namespace thetalat {

Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rational(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IntMat to_int_mat(const RatMat& m) {
    IntMat r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) {
        if (m.a[k].get_den() != 1)
            throw std::invalid_argument("matrix entry is not an integer");
        r.a[k] = m.a[k].get_num();
    }
    return r;
}

RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k)
        r.a[k] = Rational(m.a[k]);
    return r;
}

// Bareiss elimination; intermediate divisions are exact
Int det_int(const IntMat& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("det: matrix not square");
    int n = m.rows;
    if (n == 0)
        return 1;
    IntMat w = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

Rational det_rat(const RatMat& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("det: matrix not square");
    int n = m.rows;
    RatMat w = m;
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return Rational(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(w(k, j), w(piv, j));
            det = -det;
        }
        det *= w(k, k);
        Rational inv_piv = 1 / w(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (w(i, k) == 0)
                continue;
            Rational f = w(i, k) * inv_piv;
            for (int j = k; j < n; ++j)
                w(i, j) -= f * w(k, j);
        }
    }
    return det;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(RatMat& w) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c) {
        int piv = -1;
        for (int i = r; i < w.rows; ++i)
            if (w(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < w.cols; ++j)
                std::swap(w(r, j), w(piv, j));
        Rational inv = 1 / w(r, c);
        for (int j = 0; j < w.cols; ++j)
            w(r, j) *= inv;
        for (int i = 0; i < w.rows; ++i) {
            if (i == r || w(i, c) == 0)
                continue;
            Rational f = w(i, c);
            for (int j = 0; j < w.cols; ++j)
                w(i, j) -= f * w(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_rat(RatMat m) {
    return static_cast<int>(rref(m).size());
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    RatMat w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c])
            continue;
        RatVec v(m.cols, Rational(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMat inverse_unimodular(const IntMat& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("inverse: matrix not square");
    Int d = det_int(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument("inverse: matrix not unimodular");
    int n = m.rows;
    RatMat w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            w(i, j) = Rational(m(i, j));
        w(i, n + i) = 1;
    }
    rref(w);
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            assert(w(i, n + j).get_den() == 1);
            inv(i, j) = w(i, n + j).get_num();
        }
    return inv;
}

bool in_span(const std::vector<RatVec>& vs, const RatVec& v) {
    if (vs.empty()) {
        for (const auto& x : v)
            if (x != 0)
                return false;
        return true;
    }
    int dim = static_cast<int>(v.size());
    RatMat a(static_cast<int>(vs.size()), dim);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = vs[i][j];
    int r0 = rank_rat(a);
    RatMat b(a.rows + 1, dim);
    b.a.assign(a.a.begin(), a.a.end());
    for (int j = 0; j < dim; ++j)
        b(a.rows, j) = v[j];
    return rank_rat(b) == r0;
}

bool same_span(const std::vector<RatVec>& xs, const std::vector<RatVec>& ys, int dim) {
    RatMat a(static_cast<int>(xs.size()), dim), b(static_cast<int>(ys.size()), dim);
    for (size_t i = 0; i < xs.size(); ++i)
        for (int j = 0; j < dim; ++j)
            a(static_cast<int>(i), j) = xs[i][j];
    for (size_t i = 0; i < ys.size(); ++i)
        for (int j = 0; j < dim; ++j)
            b(static_cast<int>(i), j) = ys[i][j];
    int ra = rank_rat(a), rb = rank_rat(b);
    if (ra != rb)
        return false;
    RatMat c(a.rows + b.rows, dim);
    c.a.assign(a.a.begin(), a.a.end());
    c.a.insert(c.a.end(), b.a.begin(), b.a.end());
    return rank_rat(c) == ra;
}

}  // namespace thetalat
