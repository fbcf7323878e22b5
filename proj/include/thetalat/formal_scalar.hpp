#pragma once

#include <map>
#include <optional>
#include <string>

#include "thetalat/rational.hpp"

namespace thetalat {

// Exact model of the scalar (prod_p p^{e_p}) * e^{pi a} * e^{2 pi i t} with
// rational exponents, rational a and t in [0,1).  Componentwise equality is
// exact: the three factors are multiplicatively independent (the prime-power
// part is a positive real that is algebraic only for integral exponents,
// e^{pi a} is transcendental for nonzero rational a, and e^{2 pi i t} is a
// root of unity), so distinct triples never represent the same complex number.
struct FormalScalar {
    std::map<Int, Rational> primes;  // nonzero exponents only
    Rational a{0};
    Rational t{0};

    bool operator==(const FormalScalar& o) const {
        return primes == o.primes && a == o.a && t == o.t;
    }
    bool operator!=(const FormalScalar& o) const { return !(*this == o); }
    bool operator<(const FormalScalar& o) const {
        if (a != o.a)
            return a < o.a;
        if (t != o.t)
            return t < o.t;
        return primes < o.primes;
    }

    bool is_one() const { return primes.empty() && a == 0 && t == 0; }
};

FormalScalar scalar_one();

// nonzero rational value; the sign goes into the root-of-unity part
FormalScalar scalar_from_rational(const Rational& q);

// e^{2 pi i t}
FormalScalar root_of_unity(const Rational& t);

// e^{pi z} for z = x + i y rational: contributes a = x and t = y/2 mod 1
FormalScalar pi_exponent(const Gaussian& z);

FormalScalar operator*(const FormalScalar& x, const FormalScalar& y);

FormalScalar inverse(const FormalScalar& x);

// principal branch: t is divided after normalization to [0,1)
FormalScalar nth_root(const FormalScalar& x, const Int& n);

FormalScalar scalar_pow(const FormalScalar& x, const Int& n);

// multiplicative order; nullopt when infinite
std::optional<Int> scalar_order(const FormalScalar& x);

std::string scalar_str(const FormalScalar& x);

}  // namespace thetalat
