#include "thetalat/formal_scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace thetalat {

namespace {

void add_prime(std::map<Int, Rational>& primes, const Int& p, const Rational& e) {
    auto [it, inserted] = primes.emplace(p, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0)
            primes.erase(it);
    } else if (e == 0) {
        primes.erase(it);
    }
}

void factor_into(std::map<Int, Rational>& primes, Int n, const Rational& e) {
    // trial division; desk-scale inputs keep factors small
    for (Int p = 2; p * p <= n;) {
        if (n % p == 0) {
            Rational cnt = 0;
            while (n % p == 0) {
                n /= p;
                cnt += e;
            }
            add_prime(primes, p, cnt);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1)
        add_prime(primes, n, e);
}

}  // namespace

FormalScalar scalar_one() {
    return FormalScalar{};
}

FormalScalar scalar_from_rational(const Rational& q) {
    if (q == 0)
        throw std::invalid_argument("formal scalar: zero value");
    FormalScalar s;
    if (q < 0)
        s.t = make_rational(1, 2);
    factor_into(s.primes, abs(q.get_num()), Rational(1));
    factor_into(s.primes, q.get_den(), Rational(-1));
    return s;
}

FormalScalar root_of_unity(const Rational& t) {
    FormalScalar s;
    s.t = mod1(t);
    return s;
}

FormalScalar pi_exponent(const Gaussian& z) {
    FormalScalar s;
    s.a = z.re;
    s.t = mod1(z.im / 2);
    return s;
}

FormalScalar operator*(const FormalScalar& x, const FormalScalar& y) {
    FormalScalar s = x;
    for (const auto& [p, e] : y.primes)
        add_prime(s.primes, p, e);
    s.a += y.a;
    s.t = mod1(s.t + y.t);
    return s;
}

FormalScalar inverse(const FormalScalar& x) {
    FormalScalar s;
    for (const auto& [p, e] : x.primes)
        s.primes.emplace(p, -e);
    s.a = -x.a;
    s.t = mod1(-x.t);
    return s;
}

FormalScalar nth_root(const FormalScalar& x, const Int& n) {
    if (n < 1)
        throw std::invalid_argument("nth_root: n must be positive");
    FormalScalar s;
    Rational rn{n};
    for (const auto& [p, e] : x.primes)
        s.primes.emplace(p, e / rn);
    s.a = x.a / rn;
    s.t = x.t / rn;  // x.t already in [0,1), so this stays in [0,1)
    return s;
}

FormalScalar scalar_pow(const FormalScalar& x, const Int& n) {
    FormalScalar s;
    if (n == 0)
        return s;
    Rational rn{n};
    for (const auto& [p, e] : x.primes)
        s.primes.emplace(p, e * rn);
    s.a = x.a * rn;
    s.t = mod1(x.t * rn);
    return s;
}

std::optional<Int> scalar_order(const FormalScalar& x) {
    if (!x.primes.empty() || x.a != 0)
        return std::nullopt;
    return x.t.get_den();
}

std::string scalar_str(const FormalScalar& x) {
    if (x.is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : x.primes) {
        if (!first)
            os << "*";
        os << p.get_str();
        if (e != 1)
            os << "^(" << rational_str(e) << ")";
        first = false;
    }
    if (x.a != 0) {
        if (!first)
            os << "*";
        os << "e^(" << rational_str(x.a) << " pi)";
        first = false;
    }
    if (x.t != 0) {
        if (!first)
            os << "*";
        os << "e^(2 pi i * " << rational_str(x.t) << ")";
    }
    return os.str();
}

}  // namespace thetalat
