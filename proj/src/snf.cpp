#include "thetalat/snf.hpp"

#include <cstdint>
#include <unordered_map>

namespace thetalat {

namespace {

void swap_rows(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c)
        std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r)
        std::swap(m(r, i), m(r, j));
}

// row_i += q * row_k
void add_row(IntMat& m, int i, int k, const Int& q) {
    for (int c = 0; c < m.cols; ++c)
        m(i, c) += q * m(k, c);
}

// col_j += q * col_k
void add_col(IntMat& m, int j, int k, const Int& q) {
    for (int r = 0; r < m.rows; ++r)
        m(r, j) += q * m(r, k);
}

void negate_row(IntMat& m, int i) {
    for (int c = 0; c < m.cols; ++c)
        m(i, c) = -m(i, c);
}

}  // namespace

SnfResult snf(const IntMat& m) {
    SnfResult r{IntMat::identity(m.rows), m, IntMat::identity(m.cols)};
    IntMat& s = r.s;
    int n = std::min(m.rows, m.cols);
    for (int k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero |entry|, ties by lexicographic (row, col)
            int pi = -1, pj = -1;
            Int best;
            for (int i = k; i < s.rows; ++i)
                for (int j = k; j < s.cols; ++j) {
                    if (s(i, j) == 0)
                        continue;
                    Int v = abs(s(i, j));
                    if (pi < 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                k = n;  // remaining block is zero
                break;
            }
            if (pi != k) {
                swap_rows(s, k, pi);
                swap_rows(r.u, k, pi);
            }
            if (pj != k) {
                swap_cols(s, k, pj);
                swap_cols(r.v, k, pj);
            }
            bool clean = true;
            for (int i = k + 1; i < s.rows; ++i) {
                if (s(i, k) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, k).get_mpz_t(), s(k, k).get_mpz_t());
                add_row(s, i, k, -q);
                add_row(r.u, i, k, -q);
                if (s(i, k) != 0)
                    clean = false;  // strictly smaller remainder; repick pivot
            }
            for (int j = k + 1; j < s.cols; ++j) {
                if (s(k, j) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(k, j).get_mpz_t(), s(k, k).get_mpz_t());
                add_col(s, j, k, -q);
                add_col(r.v, j, k, -q);
                if (s(k, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // pivot must divide the remaining block for the divisibility chain
            bool divides_all = true;
            for (int i = k + 1; i < s.rows && divides_all; ++i)
                for (int j = k + 1; j < s.cols; ++j)
                    if (s(i, j) % s(k, k) != 0) {
                        add_row(s, k, i, Int(1));
                        add_row(r.u, k, i, Int(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
        if (k >= n)
            break;
        if (s(k, k) < 0) {
            negate_row(s, k);
            negate_row(r.u, k);
        }
    }
    return r;
}

IntMat saturate(const IntMat& b) {
    int n = b.rows, k = b.cols;
    if (rank_rat(to_rat_mat(b)) != k)
        throw std::invalid_argument("not a basis");
    SnfResult f = snf(b);
    IntMat uinv = inverse_unimodular(f.u);
    IntMat out(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j)
            out(i, j) = uinv(i, j);
    return out;
}

namespace {

// expansion along the lowest remaining index, memoized on the index subset
Int pf_subset(const IntMat& e, uint32_t mask, std::unordered_map<uint32_t, Int>& memo) {
    if (mask == 0)
        return 1;
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;
    int idx[32];
    int cnt = 0;
    for (int i = 0; i < e.rows; ++i)
        if (mask & (1u << i))
            idx[cnt++] = i;
    Int sum = 0;
    int sign = 1;
    for (int p = 1; p < cnt; ++p) {
        if (e(idx[0], idx[p]) != 0) {
            uint32_t sub = mask & ~(1u << idx[0]) & ~(1u << idx[p]);
            sum += sign * e(idx[0], idx[p]) * pf_subset(e, sub, memo);
        }
        sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
}

}  // namespace

Int pfaffian(const IntMat& e) {
    if (e.rows != e.cols)
        throw std::invalid_argument("pfaffian: matrix not square");
    if (e.rows % 2 != 0)
        throw std::invalid_argument("pfaffian: odd order");
    if (e.rows > 30)
        throw std::invalid_argument("pfaffian: order too large");
    for (int i = 0; i < e.rows; ++i) {
        if (e(i, i) != 0)
            throw std::invalid_argument("pfaffian: matrix not alternating");
        for (int j = i + 1; j < e.cols; ++j)
            if (e(i, j) != -e(j, i))
                throw std::invalid_argument("pfaffian: matrix not alternating");
    }
    std::unordered_map<uint32_t, Int> memo;
    uint32_t full = (e.rows == 32) ? ~0u : ((1u << e.rows) - 1);
    return pf_subset(e, full, memo);
}

}  // namespace thetalat
