#include "thetalat/lattice_forms.hpp"

#include <stdexcept>

namespace thetalat {

AlternatingForm make_alternating(IntMat e) {
    if (e.rows != e.cols)
        throw std::invalid_argument("alternating form: matrix not square");
    if (e.rows % 2 != 0)
        throw std::invalid_argument("alternating form: odd rank");
    for (int i = 0; i < e.rows; ++i) {
        if (e(i, i) != 0)
            throw std::invalid_argument("alternating form: nonzero diagonal");
        for (int j = i + 1; j < e.cols; ++j)
            if (e(i, j) != -e(j, i))
                throw std::invalid_argument("alternating form: not skew-symmetric");
    }
    return AlternatingForm{std::move(e)};
}

std::vector<IntVec> radical(const AlternatingForm& f) {
    // columns of V at zero diagonal positions of the Smith form are a basis
    // of ker(E) ∩ Z^{2g}; they extend to a unimodular basis, hence saturated
    SnfResult r = snf(f.e);
    std::vector<IntVec> basis;
    for (int j = 0; j < r.s.cols; ++j) {
        bool zero = j >= r.s.rows || r.s(j, j) == 0;
        if (!zero)
            continue;
        IntVec v(f.e.rows);
        for (int i = 0; i < f.e.rows; ++i)
            v[i] = r.v(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// paired congruence ops: the Gram matrix transforms as P^T M P, so every
// column operation is mirrored by the same row operation
void sym_swap(IntMat& m, IntMat& basis, int i, int j) {
    for (int r = 0; r < m.rows; ++r)
        std::swap(m(r, i), m(r, j));
    for (int c = 0; c < m.cols; ++c)
        std::swap(m(i, c), m(j, c));
    for (int r = 0; r < basis.rows; ++r)
        std::swap(basis(r, i), basis(r, j));
}

// basis vector j += q * basis vector k
void sym_add(IntMat& m, IntMat& basis, int j, int k, const Int& q) {
    for (int r = 0; r < m.rows; ++r)
        m(r, j) += q * m(r, k);
    for (int c = 0; c < m.cols; ++c)
        m(j, c) += q * m(k, c);
    for (int r = 0; r < basis.rows; ++r)
        basis(r, j) += q * basis(r, k);
}

void sym_negate(IntMat& m, IntMat& basis, int j) {
    for (int r = 0; r < m.rows; ++r)
        m(r, j) = -m(r, j);
    for (int c = 0; c < m.cols; ++c)
        m(j, c) = -m(j, c);
    for (int r = 0; r < basis.rows; ++r)
        basis(r, j) = -basis(r, j);
}

}  // namespace

SymplecticData symplectic_normal_form(const AlternatingForm& f) {
    const int n = f.e.rows;
    IntMat m = f.e;
    IntMat basis = IntMat::identity(n);

    int k = 0;  // columns < k hold finished hyperbolic pairs
    std::vector<Int> divisors;
    while (k + 1 < n) {
        // smallest nonzero |entry| of the working block, ties lexicographic
        int pi = -1, pj = -1;
        Int best;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                if (m(i, j) == 0)
                    continue;
                Int v = abs(m(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;  // zero block: the rest is radical
        if (pi != k)
            sym_swap(m, basis, k, pi);
        int col = (pj == k) ? pi : pj;  // where the pivot column went
        if (col != k + 1)
            sym_swap(m, basis, k + 1, col);
        // the pivot now sits at (k, k+1)
        if (m(k, k + 1) < 0)
            sym_negate(m, basis, k);

        // reduce the pivot row/column; restart pivot search on a remainder
        bool clean = true;
        for (int j = k + 2; j < n; ++j) {
            if (m(k, j) != 0) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(k, j).get_mpz_t(), m(k, k + 1).get_mpz_t());
                sym_add(m, basis, j, k + 1, -q);
                if (m(k, j) != 0)
                    clean = false;
            }
            if (m(k + 1, j) != 0) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(k + 1, j).get_mpz_t(), m(k, k + 1).get_mpz_t());
                sym_add(m, basis, j, k, q);  // E(e,f)=d: adding e-multiples moves row k+1
                if (m(k + 1, j) != 0)
                    clean = false;
            }
        }
        if (!clean)
            continue;

        // chain condition: the pivot must divide the remaining block
        const Int d = m(k, k + 1);
        bool divides_all = true;
        for (int i = k + 2; i < n && divides_all; ++i)
            for (int j = k + 2; j < n; ++j)
                if (m(i, j) % d != 0) {
                    sym_add(m, basis, k, i, Int(1));
                    divides_all = false;
                    break;
                }
        if (!divides_all)
            continue;

        divisors.push_back(d);
        k += 2;
    }

    SymplecticData out;
    out.divisors = std::move(divisors);
    const int npairs = static_cast<int>(out.divisors.size());
    // columns: radical basis first, then e_1, f_1, ...
    out.change_of_basis = IntMat(n, n);
    for (int j = 2 * npairs; j < n; ++j) {
        IntVec v(n);
        for (int i = 0; i < n; ++i) {
            v[i] = basis(i, j);
            out.change_of_basis(i, j - 2 * npairs) = basis(i, j);
        }
        out.radical_basis.push_back(std::move(v));
    }
    for (int p = 0; p < npairs; ++p) {
        IntVec e(n), fv(n);
        for (int i = 0; i < n; ++i) {
            e[i] = basis(i, 2 * p);
            fv[i] = basis(i, 2 * p + 1);
            out.change_of_basis(i, n - 2 * npairs + 2 * p) = basis(i, 2 * p);
            out.change_of_basis(i, n - 2 * npairs + 2 * p + 1) = basis(i, 2 * p + 1);
        }
        out.pairs.emplace_back(std::move(e), std::move(fv));
    }
    return out;
}

std::vector<RatVec> dual_lattice(const SymplecticData& s) {
    if (s.pairs.empty())
        throw std::invalid_argument("degenerate: dual lattice undefined on L1");
    std::vector<RatVec> basis;
    for (size_t p = 0; p < s.pairs.size(); ++p) {
        const Rational inv_d = make_rational(Int(1), s.divisors[p]);
        RatVec e(s.pairs[p].first.size()), f(s.pairs[p].second.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = Rational(s.pairs[p].first[i]) * inv_d;
            f[i] = Rational(s.pairs[p].second[i]) * inv_d;
        }
        basis.push_back(std::move(e));
        basis.push_back(std::move(f));
    }
    return basis;
}

DiscriminantGroup discriminant_group(const SymplecticData& s) {
    DiscriminantGroup d;
    for (const auto& di : s.divisors)
        if (di > 1)
            d.divisors.push_back(di);
    return d;
}

bool DiscriminantGroup::is_valid_element(const IntVec& x) const {
    if (static_cast<int>(x.size()) != coords())
        return false;
    for (size_t i = 0; i < x.size(); ++i) {
        const Int& d = divisors[i / 2];
        if (x[i] < 0 || x[i] >= d)
            return false;
    }
    return true;
}

IntVec DiscriminantGroup::reduce(IntVec x) const {
    if (static_cast<int>(x.size()) != coords())
        throw std::invalid_argument("discriminant group: wrong coordinate count");
    for (size_t i = 0; i < x.size(); ++i) {
        const Int& d = divisors[i / 2];
        mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), d.get_mpz_t());
    }
    return x;
}

IntVec DiscriminantGroup::add(const IntVec& x, const IntVec& y) const {
    if (x.size() != y.size())
        throw std::invalid_argument("discriminant group: size mismatch");
    IntVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        z[i] = x[i] + y[i];
    return reduce(std::move(z));
}

IntVec DiscriminantGroup::neg(const IntVec& x) const {
    IntVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        z[i] = -x[i];
    return reduce(std::move(z));
}

Int DiscriminantGroup::element_order(const IntVec& x) const {
    Int ord = 1;
    for (size_t i = 0; i < x.size(); ++i) {
        const Int& d = divisors[i / 2];
        Int g = gcd_int(x[i], d);
        ord = lcm_int(ord, d / g);
    }
    return ord;
}

std::vector<IntVec> DiscriminantGroup::all_elements() const {
    std::vector<IntVec> out;
    IntVec cur(coords(), Int(0));
    for (;;) {
        out.push_back(cur);
        int i = 0;
        for (; i < coords(); ++i) {
            cur[i] += 1;
            if (cur[i] < divisors[i / 2])
                break;
            cur[i] = 0;
        }
        if (i == coords())
            break;
    }
    return out;
}

Rational pairing_eE(const DiscriminantGroup& d, const IntVec& x, const IntVec& y) {
    if (!d.is_valid_element(x) || !d.is_valid_element(y))
        throw std::invalid_argument("pairing: malformed coordinates");
    Rational sum = 0;
    for (size_t i = 0; i < d.divisors.size(); ++i) {
        Int num = x[2 * i] * y[2 * i + 1] - y[2 * i] * x[2 * i + 1];
        sum += make_rational(num, d.divisors[i]);
    }
    return mod1(sum);
}

}  // namespace thetalat
