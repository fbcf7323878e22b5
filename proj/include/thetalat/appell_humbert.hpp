#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetalat/lattice_forms.hpp"
#include "thetalat/matrix.hpp"

namespace thetalat {

// complex data: lattice vectors as rows (2g x g) plus the Hermitian form on
// C^g (g x g, linear in the first argument)
struct PeriodData {
    GaussMat periods;
    GaussMat hermitian;
};

// Hermitian Gram matrix gram(i,j) = H(l_i, l_j) on the lattice basis together
// with semicharacter exponents alpha(l_i) = e^{2 pi i alpha_t[i]}
struct AHData {
    int g = 0;
    GaussMat gram;                // 2g x 2g
    std::vector<Rational> alpha_t;  // 2g values in [0,1)
    std::optional<PeriodData> period;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

AHData make_gram_data(GaussMat gram, std::vector<Rational> alpha_t);
AHData make_period_data(GaussMat periods, GaussMat hermitian,
                        std::vector<Rational> alpha_t);

ValidationReport validate(const AHData& d);

// E = Im(gram); throws when some imaginary part is not an integer
IntMat alternating_part(const AHData& d);

// exponent t with alpha(l) = e^{2 pi i t}, extended from the basis values by
// the cocycle rule t(l) = sum n_i t_i + (1/2) sum_{i<j} n_i n_j E(l_i, l_j)
Rational alpha_eval(const AHData& d, const IntVec& l);

// rational basis of ker(gram), asserted to agree with ker(E) as Q-subspaces
std::vector<RatVec> kernel_h(const AHData& d);

struct KGroup {
    int dim_identity_component = 0;  // g_0
    DiscriminantGroup components;
};

KGroup k_group(const AHData& d);

AHData tensor(const AHData& x, const AHData& y);
AHData power(const AHData& x, const Int& n);

bool is_pic0(const AHData& d);

// pull back along the lattice map given by m (2g_target x 2g_source)
AHData pullback(const AHData& target, const IntMat& m);

// exact positive-semidefiniteness of the g x g Hermitian form; needs period mode
bool is_semipositive(const AHData& d);

}  // namespace thetalat
