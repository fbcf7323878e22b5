#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace thetalat {

using Int = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// floor(q) as an integer
inline Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// representative of q mod 1 in [0,1)
inline Rational mod1(const Rational& q) {
    Rational r = q - Rational(floor_int(q));
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// parses "p" or "p/q" with optional leading sign on p
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, else "p/q"
std::string rational_str(const Rational& q);

struct Gaussian {
    Rational re, im;

    Gaussian() = default;
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit Gaussian(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return {re, -im}; }

    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian operator*(const Rational& q) const { return {re * q, im * q}; }
    Gaussian operator/(const Rational& q) const {
        if (q == 0)
            throw std::invalid_argument("gaussian: division by zero");
        return {re / q, im / q};
    }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

}  // namespace thetalat
