#include "thetalat/heisenberg.hpp"

#include <stdexcept>

namespace thetalat {

HeisenbergGroup::HeisenbergGroup(std::vector<Int> divisors, std::optional<Int> m)
    : divisors_(std::move(divisors)) {
    if (divisors_.empty())
        throw std::invalid_argument("heisenberg: empty divisor list");
    Int l = 1;
    for (size_t i = 0; i < divisors_.size(); ++i) {
        if (divisors_[i] < 1)
            throw std::invalid_argument("heisenberg: divisors must be positive");
        if (i + 1 < divisors_.size() && divisors_[i + 1] % divisors_[i] != 0)
            throw std::invalid_argument("heisenberg: divisors must form a chain");
        l = lcm_int(l, divisors_[i]);
    }
    m_ = m.value_or(l);
    if (m_ < 1 || m_ % l != 0)
        throw std::invalid_argument("heisenberg: m must be a multiple of lcm(divisors)");
}

Int HeisenbergGroup::order() const {
    Int n = m_;
    for (const auto& d : divisors_)
        n *= d * d;
    return n;
}

HeisenbergGroup::Elem HeisenbergGroup::identity() const {
    return Elem{Int(0), IntVec(2 * divisors_.size(), Int(0))};
}

HeisenbergGroup::Elem HeisenbergGroup::reduce(Elem e) const {
    mpz_fdiv_r(e.r.get_mpz_t(), e.r.get_mpz_t(), m_.get_mpz_t());
    for (size_t i = 0; i < e.coords.size(); ++i) {
        const Int& d = divisors_[i / 2];
        mpz_fdiv_r(e.coords[i].get_mpz_t(), e.coords[i].get_mpz_t(), d.get_mpz_t());
    }
    return e;
}

Int HeisenbergGroup::cocycle(const Elem& x, const Elem& y) const {
    Int c = 0;
    for (size_t i = 0; i < divisors_.size(); ++i)
        c += (m_ / divisors_[i]) * x.coords[2 * i] * y.coords[2 * i + 1];
    return c;
}

HeisenbergGroup::Elem HeisenbergGroup::mul(const Elem& x, const Elem& y) const {
    if (x.coords.size() != 2 * divisors_.size() || y.coords.size() != x.coords.size())
        throw std::invalid_argument("heisenberg: malformed element");
    Elem z;
    z.r = x.r + y.r + cocycle(x, y);
    z.coords.resize(x.coords.size());
    for (size_t i = 0; i < x.coords.size(); ++i)
        z.coords[i] = x.coords[i] + y.coords[i];
    return reduce(std::move(z));
}

HeisenbergGroup::Elem HeisenbergGroup::inv(const Elem& x) const {
    Elem z;
    z.r = -x.r + cocycle(x, x);
    z.coords.resize(x.coords.size());
    for (size_t i = 0; i < x.coords.size(); ++i)
        z.coords[i] = -x.coords[i];
    return reduce(std::move(z));
}

Int HeisenbergGroup::element_order(const Elem& x) const {
    Elem e = identity();
    Elem p = reduce(x);
    Int ord = 1;
    while (!(p == e)) {
        p = mul(p, x);
        ++ord;
    }
    return ord;
}

HeisenbergGroup::Elem HeisenbergGroup::commutator(const Elem& x, const Elem& y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
}

std::vector<HeisenbergGroup::Elem> HeisenbergGroup::enumerate_elements() const {
    std::vector<Elem> out;
    Elem cur = identity();
    for (;;) {
        out.push_back(cur);
        cur.r += 1;
        if (cur.r < m_) {
            continue;
        }
        cur.r = 0;
        size_t i = 0;
        for (; i < cur.coords.size(); ++i) {
            cur.coords[i] += 1;
            if (cur.coords[i] < divisors_[i / 2])
                break;
            cur.coords[i] = 0;
        }
        if (i == cur.coords.size())
            break;
    }
    return out;
}

}  // namespace thetalat
