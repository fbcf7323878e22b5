#include "thetalat/appell_humbert.hpp"

#include <stdexcept>

namespace thetalat {

namespace {

GaussMat conj_transpose(const GaussMat& m) {
    GaussMat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r(j, i) = m(i, j).conj();
    return r;
}

GaussMat gram_from_period(const GaussMat& periods, const GaussMat& hermitian) {
    return periods * hermitian * conj_transpose(periods);
}

std::vector<Rational> normalize_alpha(std::vector<Rational> alpha_t) {
    for (auto& t : alpha_t)
        t = mod1(t);
    return alpha_t;
}

// the 2g real coordinate rows (Re, Im) of the period vectors
RatMat real_coordinates(const GaussMat& periods) {
    RatMat r(periods.rows, 2 * periods.cols);
    for (int i = 0; i < periods.rows; ++i)
        for (int j = 0; j < periods.cols; ++j) {
            r(i, j) = periods(i, j).re;
            r(i, periods.cols + j) = periods(i, j).im;
        }
    return r;
}

}  // namespace

AHData make_gram_data(GaussMat gram, std::vector<Rational> alpha_t) {
    if (gram.rows != gram.cols || gram.rows % 2 != 0 || gram.rows == 0)
        throw std::invalid_argument("gram matrix must be square of even positive order");
    if (static_cast<int>(alpha_t.size()) != gram.rows)
        throw std::invalid_argument("alpha_t size must equal 2g");
    AHData d;
    d.g = gram.rows / 2;
    d.gram = std::move(gram);
    d.alpha_t = normalize_alpha(std::move(alpha_t));
    return d;
}

AHData make_period_data(GaussMat periods, GaussMat hermitian,
                        std::vector<Rational> alpha_t) {
    if (periods.cols <= 0 || periods.rows != 2 * periods.cols)
        throw std::invalid_argument("period matrix must be 2g x g");
    if (hermitian.rows != periods.cols || hermitian.cols != periods.cols)
        throw std::invalid_argument("hermitian matrix must be g x g");
    AHData d;
    d.g = periods.cols;
    d.gram = gram_from_period(periods, hermitian);
    d.alpha_t = normalize_alpha(std::move(alpha_t));
    d.period = PeriodData{std::move(periods), std::move(hermitian)};
    return d;
}

ValidationReport validate(const AHData& d) {
    ValidationReport rep;
    const GaussMat& g = d.gram;
    bool hermitian = true;
    for (int i = 0; i < g.rows && hermitian; ++i)
        for (int j = 0; j < g.cols; ++j)
            if (g(i, j) != g(j, i).conj()) {
                hermitian = false;
                break;
            }
    if (!hermitian)
        rep.violations.push_back("gram matrix is not Hermitian");
    bool integral = true;
    for (int i = 0; i < g.rows && integral; ++i)
        for (int j = 0; j < g.cols; ++j)
            if (g(i, j).im.get_den() != 1) {
                integral = false;
                break;
            }
    if (!integral)
        rep.violations.push_back("Im(gram) has a non-integer entry");
    for (const auto& t : d.alpha_t)
        if (t < 0 || t >= 1) {
            rep.violations.push_back("alpha exponent outside [0,1)");
            break;
        }
    if (d.period) {
        const PeriodData& p = *d.period;
        bool ph = true;
        for (int i = 0; i < p.hermitian.rows && ph; ++i)
            for (int j = 0; j < p.hermitian.cols; ++j)
                if (p.hermitian(i, j) != p.hermitian(j, i).conj()) {
                    ph = false;
                    break;
                }
        if (!ph)
            rep.violations.push_back("period-mode Hermitian matrix is not Hermitian");
        if (rank_rat(real_coordinates(p.periods)) != 2 * d.g)
            rep.violations.push_back("period vectors are linearly dependent over Q");
        if (gram_from_period(p.periods, p.hermitian) != d.gram)
            rep.violations.push_back("gram matrix does not match period data");
    } else {
        rep.warnings.push_back("gram mode: compatibility with a complex structure is unverified");
    }
    return rep;
}

IntMat alternating_part(const AHData& d) {
    IntMat e(d.gram.rows, d.gram.cols);
    for (int i = 0; i < e.rows; ++i)
        for (int j = 0; j < e.cols; ++j) {
            const Rational& im = d.gram(i, j).im;
            if (im.get_den() != 1)
                throw std::invalid_argument("Im(gram) has a non-integer entry");
            e(i, j) = im.get_num();
        }
    return e;
}

Rational alpha_eval(const AHData& d, const IntVec& l) {
    if (static_cast<int>(l.size()) != 2 * d.g)
        throw std::invalid_argument("alpha_eval: wrong vector length");
    Rational t = 0;
    for (size_t i = 0; i < l.size(); ++i)
        t += Rational(l[i]) * d.alpha_t[i];
    const Rational half = make_rational(1, 2);
    for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = i + 1; j < l.size(); ++j) {
            const Rational& eij = d.gram(static_cast<int>(i), static_cast<int>(j)).im;
            if (eij != 0)
                t += half * Rational(l[i] * l[j]) * eij;
        }
    return mod1(t);
}

namespace {

// rational right kernel of the Hermitian Gram matrix: real and imaginary
// parts stacked into one rational system
std::vector<RatVec> kernel_of_gauss(const GaussMat& g) {
    RatMat m(2 * g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) {
            m(i, j) = g(i, j).re;
            m(g.rows + i, j) = g(i, j).im;
        }
    return kernel_basis(m);
}

}  // namespace

std::vector<RatVec> kernel_h(const AHData& d) {
    std::vector<RatVec> kh = kernel_of_gauss(d.gram);
    std::vector<RatVec> ke = kernel_basis(to_rat_mat(alternating_part(d)));
    if (!same_span(kh, ke, 2 * d.g))
        throw std::invalid_argument("data not Appell-Humbert-consistent: ker(H) != ker(E)");
    return kh;
}

KGroup k_group(const AHData& d) {
    AlternatingForm f = make_alternating(alternating_part(d));
    SymplecticData s = symplectic_normal_form(f);
    KGroup k;
    k.dim_identity_component = s.g0();
    k.components = discriminant_group(s);
    return k;
}

AHData tensor(const AHData& x, const AHData& y) {
    if (x.g != y.g)
        throw std::invalid_argument("tensor: dimension mismatch");
    bool same_period = (!x.period && !y.period);
    if (x.period && y.period && x.period->periods == y.period->periods)
        same_period = true;
    if (!same_period)
        throw std::invalid_argument("tensor: period data mismatch");
    AHData r;
    r.g = x.g;
    r.gram = x.gram + y.gram;
    r.alpha_t.resize(x.alpha_t.size());
    for (size_t i = 0; i < r.alpha_t.size(); ++i)
        r.alpha_t[i] = mod1(x.alpha_t[i] + y.alpha_t[i]);
    if (x.period)
        r.period = PeriodData{x.period->periods, x.period->hermitian + y.period->hermitian};
    return r;
}

AHData power(const AHData& x, const Int& n) {
    if (n < 1)
        throw std::invalid_argument("power: exponent must be positive");
    AHData r;
    r.g = x.g;
    r.gram = scaled(x.gram, Gaussian(Rational(n), Rational(0)));
    r.alpha_t.resize(x.alpha_t.size());
    for (size_t i = 0; i < r.alpha_t.size(); ++i)
        r.alpha_t[i] = mod1(Rational(n) * x.alpha_t[i]);
    if (x.period) {
        GaussMat h = scaled(x.period->hermitian, Gaussian(Rational(n), Rational(0)));
        r.period = PeriodData{x.period->periods, std::move(h)};
    }
    return r;
}

bool is_pic0(const AHData& d) {
    return d.gram.is_zero();
}

AHData pullback(const AHData& target, const IntMat& m) {
    if (m.rows != 2 * target.g)
        throw std::invalid_argument("pullback: matrix rows must match target lattice rank");
    if (m.cols % 2 != 0 || m.cols == 0)
        throw std::invalid_argument("pullback: matrix columns must be even and positive");
    GaussMat mg(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            mg(i, j) = Gaussian(Rational(m(i, j)), Rational(0));
    AHData r;
    r.g = m.cols / 2;
    r.gram = mg.transposed() * target.gram * mg;
    r.alpha_t.resize(m.cols);
    for (int j = 0; j < m.cols; ++j) {
        IntVec col(m.rows);
        for (int i = 0; i < m.rows; ++i)
            col[i] = m(i, j);
        r.alpha_t[j] = alpha_eval(target, col);
    }
    return r;
}

bool is_semipositive(const AHData& d) {
    if (!d.period)
        throw std::invalid_argument("semipositivity needs complex data");
    GaussMat h = d.period->hermitian;
    std::vector<int> alive(h.rows);
    for (int i = 0; i < h.rows; ++i)
        alive[i] = i;
    // pivoted exact LDL: strip positive pivots; a zero pivot forces its whole
    // row to vanish, a negative pivot refutes
    while (!alive.empty()) {
        int pivot = -1;
        for (size_t k = 0; k < alive.size(); ++k) {
            const Gaussian& diag = h(alive[k], alive[k]);
            if (!diag.is_real())
                throw std::invalid_argument("hermitian matrix has non-real diagonal");
            if (diag.re < 0)
                return false;
            if (diag.re > 0 && pivot < 0)
                pivot = static_cast<int>(k);
        }
        if (pivot < 0) {
            // all remaining diagonal entries vanish
            for (size_t k = 0; k < alive.size(); ++k)
                for (size_t l = 0; l < alive.size(); ++l)
                    if (!h(alive[k], alive[l]).is_zero())
                        return false;
            return true;
        }
        int p = alive[pivot];
        Rational d_p = h(p, p).re;
        alive.erase(alive.begin() + pivot);
        for (int i : alive)
            for (int j : alive)
                h(i, j) = h(i, j) - h(i, p) * h(p, j) / d_p;
    }
    return true;
}

}  // namespace thetalat
