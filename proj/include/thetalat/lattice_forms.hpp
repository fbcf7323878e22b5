#pragma once

#include <utility>
#include <vector>

#include "thetalat/matrix.hpp"
#include "thetalat/snf.hpp"

namespace thetalat {

// alternating integer form on Z^{2g}, given by its Gram matrix
struct AlternatingForm {
    IntMat e;

    int rank2g() const { return e.rows; }
};

// throws unless e is square of even order with e^T = -e and zero diagonal
AlternatingForm make_alternating(IntMat e);

// Symplectic structure of the form: unimodular change of basis whose columns
// are a radical basis followed by hyperbolic pairs e_i, f_i with
// E(e_i, f_i) = d_i, d_i | d_{i+1}, and all other products zero.
struct SymplecticData {
    std::vector<IntVec> radical_basis;
    std::vector<std::pair<IntVec, IntVec>> pairs;
    std::vector<Int> divisors;
    IntMat change_of_basis;

    int g0() const { return static_cast<int>(radical_basis.size()) / 2; }
    Int divisor_product() const {
        Int p = 1;
        for (const auto& d : divisors)
            p *= d;
        return p;
    }
};

// saturated basis of { l : E(l, m) = 0 for all m }, computed through the
// Smith normal form of E (independent of symplectic_normal_form's route)
std::vector<IntVec> radical(const AlternatingForm& f);

SymplecticData symplectic_normal_form(const AlternatingForm& f);

// basis (1/d_i) e_i, (1/d_i) f_i of the dual lattice on the nondegenerate
// part, in ambient lattice coordinates; throws when E vanishes identically
std::vector<RatVec> dual_lattice(const SymplecticData& s);

// finite group  ⊕ (Z/d_i)^2  with coordinates (a_1, b_1, ..., a_k, b_k);
// divisors with d_i = 1 are dropped
struct DiscriminantGroup {
    std::vector<Int> divisors;  // all > 1, divisibility chain

    int coords() const { return 2 * static_cast<int>(divisors.size()); }
    Int order() const {
        Int p = 1;
        for (const auto& d : divisors)
            p *= d * d;
        return p;
    }
    Int divisor_product() const {
        Int p = 1;
        for (const auto& d : divisors)
            p *= d;
        return p;
    }

    bool is_valid_element(const IntVec& x) const;
    IntVec reduce(IntVec x) const;  // componentwise mod d_i
    IntVec add(const IntVec& x, const IntVec& y) const;
    IntVec neg(const IntVec& x) const;
    IntVec zero() const { return IntVec(coords(), Int(0)); }
    Int element_order(const IntVec& x) const;
    std::vector<IntVec> all_elements() const;  // enumeration in mixed radix order
};

DiscriminantGroup discriminant_group(const SymplecticData& s);

// alternating pairing e_E(x, y) = sum (a_i b'_i - a'_i b_i) / d_i  mod 1
Rational pairing_eE(const DiscriminantGroup& d, const IntVec& x, const IntVec& y);

}  // namespace thetalat
