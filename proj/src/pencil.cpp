#include "thetalat/pencil.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace thetalat {

namespace {

// dense integer polynomial, coefficients low to high, no trailing zeros
struct IntPoly {
    std::vector<Int> c;

    bool is_zero() const { return c.empty(); }

    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0)
            p.c.push_back(std::move(v));
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }
};

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size())
            r.c[i] += a.c[i];
        if (i < b.c.size())
            r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

// exact division; throws when the remainder is nonzero
IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    if (a.is_zero())
        return {};
    if (a.c.size() < b.c.size())
        throw std::logic_error("polynomial division is not exact");
    IntPoly rem = a, q;
    q.c.assign(a.c.size() - b.c.size() + 1, Int(0));
    for (size_t k = q.c.size(); k-- > 0;) {
        if (rem.c.size() < b.c.size() + k)
            continue;
        Int num = rem.c[b.c.size() - 1 + k];
        if (num % b.c.back() != 0)
            throw std::logic_error("polynomial division is not exact");
        Int f = num / b.c.back();
        q.c[k] = f;
        if (f != 0)
            for (size_t j = 0; j < b.c.size(); ++j)
                rem.c[j + k] -= f * b.c[j];
        while (!rem.c.empty() && rem.c.back() == 0)
            rem.c.pop_back();
    }
    if (!rem.is_zero())
        throw std::logic_error("polynomial division is not exact");
    q.trim();
    return q;
}

// Bareiss elimination over Z[T]; all divisions are exact
IntPoly det_poly_matrix(std::vector<std::vector<IntPoly>> w) {
    const int n = static_cast<int>(w.size());
    if (n == 0)
        return IntPoly::constant(Int(1));
    int sign = 1;
    IntPoly prev = IntPoly::constant(Int(1));
    for (int k = 0; k < n - 1; ++k) {
        if (w[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return {};
            std::swap(w[k], w[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w[i][j] = exact_div(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
        prev = w[k][k];
    }
    IntPoly d = w[n - 1][n - 1];
    if (sign < 0)
        d = IntPoly{} - d;
    return d;
}

IntMat restrict_form(const IntMat& e, const IntMat& basis) {
    IntMat r(basis.cols, basis.cols);
    for (int i = 0; i < basis.cols; ++i)
        for (int j = 0; j < basis.cols; ++j) {
            Int v = 0;
            for (int a = 0; a < e.rows; ++a)
                for (int b = 0; b < e.cols; ++b)
                    if (e(a, b) != 0)
                        v += basis(a, i) * e(a, b) * basis(b, j);
            r(i, j) = v;
        }
    return r;
}

}  // namespace

bool is_dominated(const AHData& base, const AHData& dominating) {
    if (base.g != dominating.g)
        throw std::invalid_argument("pencil: dimension mismatch");
    for (const RatVec& v : kernel_h(dominating)) {
        for (int i = 0; i < base.gram.rows; ++i) {
            Gaussian x(Rational(0), Rational(0));
            for (int j = 0; j < base.gram.cols; ++j)
                x = x + base.gram(i, j) * v[j];
            if (!x.is_zero())
                return false;
        }
    }
    return true;
}

Pencil make_pencil(AHData base, AHData dominating) {
    if (base.g != dominating.g)
        throw std::invalid_argument("pencil: dimension mismatch");
    if (base.period.has_value() != dominating.period.has_value())
        throw std::invalid_argument("pencil: period modes differ");
    ValidationReport vb = validate(base), vd = validate(dominating);
    if (!vb.ok())
        throw std::invalid_argument("pencil: invalid base data: " + vb.violations.front());
    if (!vd.ok())
        throw std::invalid_argument("pencil: invalid dominating data: " + vd.violations.front());
    IntMat e_dom = alternating_part(dominating);
    if (e_dom.is_zero())
        throw std::invalid_argument("H = 0: no pencil growth");
    if (!is_dominated(base, dominating))
        throw std::invalid_argument("domination fails: ker(H) is not contained in ker of the base form");

    SymplecticData s = symplectic_normal_form(make_alternating(e_dom));
    Pencil p;
    p.g0 = s.g0();
    const int n2g = e_dom.rows;
    const int m = 2 * static_cast<int>(s.pairs.size());
    p.l1_basis = IntMat(n2g, m);
    for (int k = 0; k < m / 2; ++k)
        for (int i = 0; i < n2g; ++i) {
            p.l1_basis(i, 2 * k) = s.pairs[k].first[i];
            p.l1_basis(i, 2 * k + 1) = s.pairs[k].second[i];
        }
    p.e_dom_l1 = restrict_form(e_dom, p.l1_basis);
    p.e_base_l1 = restrict_form(alternating_part(base), p.l1_basis);
    p.base = std::move(base);
    p.dominating = std::move(dominating);
    return p;
}

Int DetPolynomial::eval(const Int& x) const {
    Int v = 0;
    for (size_t i = coeffs.size(); i-- > 0;)
        v = v * x + coeffs[i];
    return v;
}

DetPolynomial det_polynomial(const Pencil& p) {
    const int m = p.e_dom_l1.rows;
    std::vector<std::vector<IntPoly>> w(m, std::vector<IntPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            IntPoly& e = w[i][j];
            e.c.assign(2, Int(0));
            e.c[0] = p.e_base_l1(i, j);
            e.c[1] = p.e_dom_l1(i, j);
            e.trim();
        }
    IntPoly f = det_poly_matrix(std::move(w));
    DetPolynomial out;
    out.coeffs = f.c;
    out.coeffs.resize(m + 1, Int(0));  // degree is exactly m, leading det(e_dom_l1)
    if (out.leading() <= 0)
        throw std::logic_error("det polynomial: leading coefficient must be positive");
    for (Int n = 1; n <= 2; ++n) {
        IntMat en = p.e_base_l1;
        for (size_t k = 0; k < en.a.size(); ++k)
            en.a[k] += n * p.e_dom_l1.a[k];
        if (out.eval(n) != det_int(en))
            throw std::logic_error("det polynomial: evaluation mismatch");
    }
    return out;
}

std::vector<Int> degenerate_set(const DetPolynomial& f) {
    size_t low = 0;
    while (low < f.coeffs.size() && f.coeffs[low] == 0)
        ++low;
    if (low == f.coeffs.size())
        throw std::invalid_argument("degenerate set: zero polynomial");
    // positive integer roots divide the trailing nonzero coefficient
    Int c0 = abs(f.coeffs[low]);
    std::vector<Int> roots;
    for (Int d = 1; d * d <= c0; ++d) {
        if (c0 % d != 0)
            continue;
        Int other = c0 / d;
        if (f.eval(d) == 0)
            roots.push_back(d);
        if (f.eval(other) == 0)
            roots.push_back(other);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Int growth_bound(const DetPolynomial& f) {
    auto cauchy = [](const std::vector<Int>& c) -> Int {
        Int lead = abs(c.back());
        Rational mx = 0;
        for (size_t i = 0; i + 1 < c.size(); ++i) {
            Rational v = make_rational(abs(c[i]), lead);
            if (v > mx)
                mx = v;
        }
        Int b = floor_int(mx) + 2;
        return b;
    };
    std::vector<Int> deriv;
    for (size_t i = 1; i < f.coeffs.size(); ++i)
        deriv.push_back(Int(i) * f.coeffs[i]);
    return std::max(cauchy(f.coeffs), cauchy(deriv));
}

GrowthTable growth_table(const Pencil& p, int n_max, Exec exec) {
    if (n_max < 1)
        throw std::invalid_argument("growth table: n_max must be positive");
    GrowthTable t;
    t.f = det_polynomial(p);
    t.bound = growth_bound(t.f);
    std::vector<Int> degenerate = degenerate_set(t.f);
    t.rows.resize(n_max);

    auto build_row = [&](int idx) {
        Int n = idx + 1;
        GrowthRow& row = t.rows[idx];
        row.n = n;
        row.f_n = t.f.eval(n);
        if (std::binary_search(degenerate.begin(), degenerate.end(), n)) {
            row.degenerate = true;
            return;
        }
        IntMat en = p.e_base_l1;
        for (size_t k = 0; k < en.a.size(); ++k)
            en.a[k] += n * p.e_dom_l1.a[k];
        SymplecticData s = symplectic_normal_form(make_alternating(en));
        row.divisors = s.divisors;
        row.jordan = s.divisor_product();
        if (row.jordan * row.jordan != row.f_n)
            throw std::logic_error("growth table: divisors disagree with det polynomial");
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n_max; ++i)
            build_row(i);
    } else {
        for (int i = 0; i < n_max; ++i)
            build_row(i);
    }
    return t;
}

Certificate non_jordan_certificate(const AHData& base, const AHData& dominating,
                                   const CertificateOptions& opts) {
    Certificate cert;
    IntMat e_dom = alternating_part(dominating);
    if (e_dom.is_zero())
        throw std::invalid_argument("H = 0: no pencil growth");
    cert.hypotheses.push_back({"dominating form nonzero", "pass"});

    if (!is_dominated(base, dominating))
        throw std::invalid_argument("domination fails: ker(H) is not contained in ker of the base form");
    cert.hypotheses.push_back({"domination ker(H) within ker(base)", "pass"});

    if (dominating.period) {
        if (!is_semipositive(dominating))
            throw std::invalid_argument("dominating form is not semipositive");
        cert.hypotheses.push_back({"dominating form semipositive", "pass"});
    } else if (opts.assume_semipositive) {
        cert.hypotheses.push_back({"dominating form semipositive", "assumed"});
    } else {
        throw std::invalid_argument(
            "semipositivity is unverifiable in gram mode; pass the explicit waiver to proceed");
    }

    AHData dom = dominating;
    bool even = true;
    for (const auto& v : e_dom.a)
        if (v % 2 != 0) {
            even = false;
            break;
        }
    if (!even) {
        dom = power(dominating, Int(2));
        cert.doubled = true;
        cert.hypotheses.push_back({"even pairing for the trivial semicharacter", "doubled"});
    } else {
        cert.hypotheses.push_back({"even pairing for the trivial semicharacter", "pass"});
    }
    // the family tensors the base with powers of the dominating bundle
    // carrying the trivial semicharacter, so alpha stays that of the base
    for (auto& tv : dom.alpha_t)
        tv = 0;

    Pencil p = make_pencil(base, dom);
    cert.table = growth_table(p, opts.n_max);
    Int best = 0;
    for (const GrowthRow& row : cert.table.rows)
        if (!row.degenerate && row.jordan > best) {
            best = row.jordan;
            cert.increasing_jordans.emplace_back(row.n, row.jordan);
        }
    cert.analytic_note =
        "Unboundedness of the Jordan constants along the family transfers to the "
        "bimeromorphism group of the projectivized bundle through twisting by a "
        "section-bearing line bundle; that analytic step is assumed, not computed.";
    return cert;
}

std::string to_text(const Certificate& c) {
    std::ostringstream os;
    os << "non-Jordan growth certificate\n";
    os << "hypotheses:\n";
    for (const auto& h : c.hypotheses)
        os << "  " << h.name << ": " << h.status << "\n";
    os << "det polynomial coefficients (low to high):";
    for (const auto& v : c.table.f.coeffs)
        os << " " << v.get_str();
    os << "\n";
    os << "strictly increasing past n = " << c.table.bound.get_str() << "\n";
    os << "growth table:\n";
    for (const auto& row : c.table.rows) {
        os << "  n = " << row.n.get_str();
        if (row.degenerate) {
            os << "  degenerate\n";
            continue;
        }
        os << "  divisors = (";
        for (size_t i = 0; i < row.divisors.size(); ++i)
            os << (i ? "," : "") << row.divisors[i].get_str();
        os << ")  jordan = " << row.jordan.get_str()
           << "  f(n) = " << row.f_n.get_str() << "\n";
    }
    os << "unbounded subsequence (n, jordan):";
    for (const auto& [n, j] : c.increasing_jordans)
        os << " (" << n.get_str() << "," << j.get_str() << ")";
    os << "\n" << c.analytic_note << "\n";
    return os.str();
}

}  // namespace thetalat
