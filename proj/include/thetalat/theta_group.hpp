#pragma once

#include <vector>

#include "thetalat/appell_humbert.hpp"
#include "thetalat/formal_scalar.hpp"
#include "thetalat/lattice_forms.hpp"

namespace thetalat {

// scalar times coset representative; canonical form has every u_i in [0,1)
struct ThetaElement {
    FormalScalar s;
    RatVec u;

    bool operator==(const ThetaElement& o) const { return s == o.s && u == o.u; }
    bool operator!=(const ThetaElement& o) const { return !(*this == o); }
    bool operator<(const ThetaElement& o) const {
        if (u != o.u)
            return u < o.u;
        return s < o.s;
    }
};

// exact arithmetic in the theta group of an Appell-Humbert datum: elements
// are cosets mult(s) B_{H,u} modulo the lattice action, multiplied by
//   B_{H,u} B_{H,v} = mult(e^{pi H(u,v)}) B_{H,u+v}
class ThetaGroup {
public:
    explicit ThetaGroup(AHData d);

    const AHData& data() const { return data_; }
    const SymplecticData& symplectic() const { return sym_; }
    const DiscriminantGroup& discriminant() const { return disc_; }
    int rank() const { return 2 * data_.g; }

    // H(u, v) = u^T G v for real rational coordinate vectors
    Gaussian herm(const RatVec& u, const RatVec& v) const;
    // E(u, v) = Im H(u, v)
    Rational alt(const RatVec& u, const RatVec& v) const;

    bool in_dual(const RatVec& u) const;  // E u integral

    ThetaElement make(FormalScalar s, RatVec u) const;  // validates and canonicalizes
    ThetaElement scalar(FormalScalar s) const;
    ThetaElement translation(RatVec u) const;  // B_{H,u}
    ThetaElement identity() const;

    ThetaElement mul(const ThetaElement& x, const ThetaElement& y) const;
    ThetaElement inv(const ThetaElement& x) const;
    ThetaElement pow(const ThetaElement& x, Int n) const;
    ThetaElement canonicalize(const ThetaElement& x) const;

    // commutator x y x^{-1} y^{-1}: closed form e^{2 pi i E(u_x, u_y)},
    // cross-checked against the four-fold product
    FormalScalar commutator(const ThetaElement& x, const ThetaElement& y) const;

    bool in_center(const ThetaElement& x) const;

    // lattice coordinates of a discriminant-group element (a_i, b_i) ->
    // sum (a_i/d_i) e_i + (b_i/d_i) f_i
    RatVec coset_representative(const IntVec& disc_elem) const;

private:
    AHData data_;
    IntMat e_;
    SymplecticData sym_;
    DiscriminantGroup disc_;
    std::vector<int> disc_pair_;  // pair index per discriminant divisor
    RatMat cob_inv_;
};

// lifts the subgroup of the discriminant group generated by `generators` to a
// finite subgroup of the theta group: each element lifted with matching order
// and inverse-compatibly, then saturated by the d^2-th roots of unity
std::vector<ThetaElement> lift_finite(const ThetaGroup& g,
                                      const std::vector<IntVec>& generators);

}  // namespace thetalat
