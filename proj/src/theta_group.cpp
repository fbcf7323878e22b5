#include "thetalat/theta_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace thetalat {

ThetaGroup::ThetaGroup(AHData d) : data_(std::move(d)) {
    e_ = alternating_part(data_);
    sym_ = symplectic_normal_form(make_alternating(e_));
    disc_ = discriminant_group(sym_);
    for (size_t p = 0; p < sym_.divisors.size(); ++p)
        if (sym_.divisors[p] > 1)
            disc_pair_.push_back(static_cast<int>(p));
    IntMat inv = inverse_unimodular(sym_.change_of_basis);
    cob_inv_ = to_rat_mat(inv);
}

Gaussian ThetaGroup::herm(const RatVec& u, const RatVec& v) const {
    if (static_cast<int>(u.size()) != rank() || static_cast<int>(v.size()) != rank())
        throw std::invalid_argument("theta group: wrong vector length");
    Gaussian sum(Rational(0), Rational(0));
    for (int i = 0; i < rank(); ++i) {
        if (u[i] == 0)
            continue;
        for (int j = 0; j < rank(); ++j) {
            if (v[j] == 0)
                continue;
            sum = sum + data_.gram(i, j) * (u[i] * v[j]);
        }
    }
    return sum;
}

Rational ThetaGroup::alt(const RatVec& u, const RatVec& v) const {
    return herm(u, v).im;
}

bool ThetaGroup::in_dual(const RatVec& u) const {
    if (static_cast<int>(u.size()) != rank())
        return false;
    for (int i = 0; i < rank(); ++i) {
        Rational x = 0;
        for (int j = 0; j < rank(); ++j)
            x += Rational(e_(i, j)) * u[j];
        if (x.get_den() != 1)
            return false;
    }
    return true;
}

ThetaElement ThetaGroup::make(FormalScalar s, RatVec u) const {
    if (!in_dual(u))
        throw std::invalid_argument("theta element: u is not in the dual lattice");
    return canonicalize(ThetaElement{std::move(s), std::move(u)});
}

ThetaElement ThetaGroup::scalar(FormalScalar s) const {
    return ThetaElement{std::move(s), RatVec(rank(), Rational(0))};
}

ThetaElement ThetaGroup::translation(RatVec u) const {
    return make(scalar_one(), std::move(u));
}

ThetaElement ThetaGroup::identity() const {
    return scalar(scalar_one());
}

ThetaElement ThetaGroup::canonicalize(const ThetaElement& x) const {
    IntVec n(rank());
    RatVec rest(rank());
    bool shifted = false;
    for (int i = 0; i < rank(); ++i) {
        n[i] = floor_int(x.u[i]);
        rest[i] = x.u[i] - Rational(n[i]);
        if (n[i] != 0)
            shifted = true;
    }
    if (!shifted)
        return x;
    // mult(s) B_{H,u} = mult(s alpha(n)^{-1} e^{-pi H(rest,n) - pi H(n,n)/2})
    //                   B_{H,rest} A_{H,n}
    RatVec nr(rank());
    for (int i = 0; i < rank(); ++i)
        nr[i] = Rational(n[i]);
    FormalScalar s = x.s;
    s = s * root_of_unity(-alpha_eval(data_, n));
    s = s * pi_exponent(-(herm(rest, nr) + herm(nr, nr) / Rational(2)));
    return ThetaElement{std::move(s), std::move(rest)};
}

ThetaElement ThetaGroup::mul(const ThetaElement& x, const ThetaElement& y) const {
    FormalScalar s = x.s * y.s * pi_exponent(herm(x.u, y.u));
    RatVec u(rank());
    for (int i = 0; i < rank(); ++i)
        u[i] = x.u[i] + y.u[i];
    return canonicalize(ThetaElement{std::move(s), std::move(u)});
}

ThetaElement ThetaGroup::inv(const ThetaElement& x) const {
    FormalScalar s = inverse(x.s) * pi_exponent(herm(x.u, x.u));
    RatVec u(rank());
    for (int i = 0; i < rank(); ++i)
        u[i] = -x.u[i];
    return canonicalize(ThetaElement{std::move(s), std::move(u)});
}

ThetaElement ThetaGroup::pow(const ThetaElement& x, Int n) const {
    if (n < 0)
        return pow(inv(x), -n);
    ThetaElement acc = identity();
    ThetaElement base = canonicalize(x);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t()))
            acc = mul(acc, base);
        base = mul(base, base);
        n /= 2;
    }
    return acc;
}

FormalScalar ThetaGroup::commutator(const ThetaElement& x, const ThetaElement& y) const {
    FormalScalar closed = root_of_unity(alt(x.u, y.u));
    ThetaElement four = mul(mul(x, y), mul(inv(x), inv(y)));
    if (!std::all_of(four.u.begin(), four.u.end(), [](const Rational& q) { return q == 0; }))
        throw std::logic_error("commutator: four-fold product is not central");
    if (four.s != closed)
        throw std::logic_error("commutator: group law disagrees with closed form");
    return closed;
}

bool ThetaGroup::in_center(const ThetaElement& x) const {
    RatVec w = mat_vec(cob_inv_, x.u);
    // pair coordinates occupy the tail; central iff they are all integral
    for (size_t i = sym_.radical_basis.size(); i < w.size(); ++i)
        if (w[i].get_den() != 1)
            return false;
    return true;
}

RatVec ThetaGroup::coset_representative(const IntVec& x) const {
    if (!disc_.is_valid_element(x))
        throw std::invalid_argument("coset representative: malformed coordinates");
    RatVec u(rank(), Rational(0));
    for (size_t k = 0; k < disc_.divisors.size(); ++k) {
        const auto& pr = sym_.pairs[disc_pair_[k]];
        Rational ca = make_rational(x[2 * k], disc_.divisors[k]);
        Rational cb = make_rational(x[2 * k + 1], disc_.divisors[k]);
        for (int i = 0; i < rank(); ++i)
            u[i] += ca * Rational(pr.first[i]) + cb * Rational(pr.second[i]);
    }
    return u;
}

std::vector<ThetaElement> lift_finite(const ThetaGroup& g,
                                      const std::vector<IntVec>& generators) {
    const DiscriminantGroup& disc = g.discriminant();
    for (const auto& x : generators)
        if (!disc.is_valid_element(x))
            throw std::invalid_argument("lift_finite: generator outside the discriminant group");

    // close the generators to the full (abelian) subgroup
    std::map<IntVec, bool> delta;
    delta[disc.zero()] = true;
    for (;;) {
        bool grew = false;
        std::vector<IntVec> cur;
        cur.reserve(delta.size());
        for (const auto& [v, _] : delta)
            cur.push_back(v);
        for (const auto& v : cur)
            for (const auto& w : generators) {
                IntVec z = disc.add(v, w);
                if (delta.emplace(std::move(z), true).second)
                    grew = true;
            }
        if (!grew)
            break;
    }

    if (g.data().gram.is_zero() && delta.size() > 1)
        throw std::invalid_argument("lift_finite: H = 0 admits only the trivial subgroup");

    // exponent of the subgroup
    Int d = 1;
    for (const auto& [v, _] : delta)
        d = lcm_int(d, disc.element_order(v));

    // order-matching lifts, with the lift of -x set to the inverse of the
    // lift of x
    std::map<IntVec, ThetaElement> lifts;
    for (const auto& [v, _] : delta) {
        if (lifts.count(v))
            continue;
        Int ord = disc.element_order(v);
        ThetaElement base = g.translation(g.coset_representative(v));
        ThetaElement p = g.pow(base, ord);
        FormalScalar gamma = nth_root(inverse(p.s), ord);
        ThetaElement lift = g.mul(g.scalar(gamma), base);
        lifts.emplace(v, lift);
        IntVec nv = disc.neg(v);
        if (!lifts.count(nv))
            lifts.emplace(nv, g.inv(lift));
    }

    Int d2 = d * d;
    std::vector<ThetaElement> out;
    for (const auto& [v, lift] : lifts)
        for (Int k = 0; k < d2; ++k)
            out.push_back(g.mul(g.scalar(root_of_unity(make_rational(k, d2))), lift));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace thetalat
