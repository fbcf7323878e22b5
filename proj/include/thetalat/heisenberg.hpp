#pragma once

#include <optional>
#include <vector>

#include "thetalat/lattice_forms.hpp"
#include "thetalat/rational.hpp"

namespace thetalat {

// finite central extension of ⊕ (Z/d_i)^2 by Z/m whose commutator pairing is
// e_E: elements (r, a_1, b_1, ..., a_k, b_k), multiplied by
//   (r, a, b)(r', a', b') = (r + r' + sum_i (m/d_i) a_i b'_i, a + a', b + b')
// so that the commutator of x and y maps to e_E(x, y) under r -> r/m
class HeisenbergGroup {
public:
    struct Elem {
        Int r;
        IntVec coords;  // (a_1, b_1, ..., a_k, b_k)

        bool operator==(const Elem& o) const { return r == o.r && coords == o.coords; }
    };

    explicit HeisenbergGroup(std::vector<Int> divisors, std::optional<Int> m = std::nullopt);

    const std::vector<Int>& divisors() const { return divisors_; }
    const Int& central_order() const { return m_; }
    Int order() const;

    Elem identity() const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Int element_order(const Elem& x) const;
    Elem commutator(const Elem& x, const Elem& y) const;

    std::vector<Elem> enumerate_elements() const;

private:
    std::vector<Int> divisors_;
    Int m_;

    Int cocycle(const Elem& x, const Elem& y) const;
    Elem reduce(Elem e) const;
};

}  // namespace thetalat
