#pragma once

#include <random>

#include "thetalat/appell_humbert.hpp"
#include "thetalat/lattice_forms.hpp"
#include "thetalat/theta_group.hpp"

namespace thetalat::testsupport {

using Rng = std::mt19937_64;

inline IntMat random_alternating(Rng& rng, int max_half_rank, int entry_bound) {
    std::uniform_int_distribution<int> half(1, max_half_rank);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    int n = 2 * half(rng);
    IntMat e(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            e(i, j) = entry(rng);
            e(j, i) = -e(i, j);
        }
    return e;
}

inline IntMat random_unimodular(Rng& rng, int n, int ops = 12) {
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    IntMat u = IntMat::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        switch (kind(rng)) {
            case 0: {
                Int q(coef(rng));
                for (int c = 0; c < n; ++c)
                    u(i, c) += q * u(j, c);
                break;
            }
            case 1:
                for (int c = 0; c < n; ++c)
                    std::swap(u(i, c), u(j, c));
                break;
            default:
                for (int c = 0; c < n; ++c)
                    u(i, c) = -u(i, c);
        }
    }
    return u;
}

// gram = i E is Hermitian with Im = E; canonical gram-mode embedding of an
// alternating form, alpha trivial by default
inline AHData gram_from_e(const IntMat& e, std::vector<Rational> alpha_t = {}) {
    GaussMat g(e.rows, e.cols);
    for (int i = 0; i < e.rows; ++i)
        for (int j = 0; j < e.cols; ++j)
            g(i, j) = Gaussian(Rational(0), Rational(e(i, j)));
    if (alpha_t.empty())
        alpha_t.assign(e.rows, Rational(0));
    return make_gram_data(std::move(g), std::move(alpha_t));
}

inline IntMat e_block(long d) {
    IntMat e(2, 2);
    e(0, 1) = d;
    e(1, 0) = -d;
    return e;
}

inline IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            m(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            m(a.rows + i, a.cols + j) = b(i, j);
    return m;
}

// period-mode datum over the lattice basis e_1..e_g, (s_k + i r_k) e_k with
// hermitian diag(m_k / r_k); the alternating form is then diag-block with
// pairing numbers m_k, so divisor data follow the m_k exactly
inline AHData diag_period_data(const std::vector<long>& m, const std::vector<long>& r,
                               const std::vector<long>& s,
                               std::vector<Rational> alpha_t = {}) {
    int g = static_cast<int>(m.size());
    GaussMat periods(2 * g, g);
    GaussMat h(g, g);
    for (int k = 0; k < g; ++k) {
        periods(k, k) = Gaussian(Rational(1), Rational(0));
        periods(g + k, k) = Gaussian(Rational(s[k]), Rational(r[k]));
        h(k, k) = Gaussian(make_rational(m[k], r[k]), Rational(0));
    }
    if (alpha_t.empty())
        alpha_t.assign(2 * g, Rational(0));
    return make_period_data(std::move(periods), std::move(h), std::move(alpha_t));
}

inline AHData random_period_data(Rng& rng, int g, int zero_dirs = 0,
                                 bool semipositive = false) {
    std::uniform_int_distribution<long> mdist(1, 6), rdist(1, 4), sdist(-3, 3);
    std::uniform_int_distribution<long> adist(0, 11);
    std::vector<long> m(g), r(g), s(g);
    for (int k = 0; k < g; ++k) {
        m[k] = (k < zero_dirs) ? 0 : mdist(rng);
        if (!semipositive && m[k] != 0 && (rng() & 1))
            m[k] = -m[k];
        r[k] = rdist(rng);
        s[k] = sdist(rng);
    }
    std::vector<Rational> alpha;
    for (int i = 0; i < 2 * g; ++i)
        alpha.push_back(make_rational(adist(rng), 12));
    AHData base = diag_period_data(m, r, s, alpha);
    // re-express the lattice in a random unimodular basis
    IntMat u = random_unimodular(rng, 2 * g);
    GaussMat up(2 * g, g);
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < g; ++j) {
            Gaussian acc(Rational(0), Rational(0));
            for (int k = 0; k < 2 * g; ++k)
                acc = acc + base.period->periods(k, j) * Rational(u(i, k));
            up(i, j) = acc;
        }
    std::vector<Rational> alpha2;
    for (int i = 0; i < 2 * g; ++i)
        alpha2.push_back(make_rational(adist(rng), 12));
    return make_period_data(std::move(up), base.period->hermitian, std::move(alpha2));
}

inline ThetaElement random_theta(Rng& rng, const ThetaGroup& tg) {
    const DiscriminantGroup& disc = tg.discriminant();
    std::uniform_int_distribution<long> rnd(0, 1 << 20);
    IntVec x = disc.zero();
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = Int(rnd(rng)) % disc.divisors[i / 2];
    RatVec u = tg.coset_representative(x);
    for (const auto& rad : tg.symplectic().radical_basis) {
        Rational c = make_rational(rnd(rng) % 9 - 4, rnd(rng) % 4 + 1);
        for (size_t i = 0; i < u.size(); ++i)
            u[i] += c * Rational(rad[i]);
    }
    for (size_t i = 0; i < u.size(); ++i)
        u[i] += Rational(Int(rnd(rng) % 5 - 2));  // integer shifts canonicalize away
    FormalScalar sc = root_of_unity(make_rational(rnd(rng) % 24, 24));
    if (rnd(rng) % 3 == 0)
        sc = sc * scalar_from_rational(make_rational(rnd(rng) % 5 + 1, rnd(rng) % 3 + 1));
    return tg.make(sc, u);
}

}  // namespace thetalat::testsupport
