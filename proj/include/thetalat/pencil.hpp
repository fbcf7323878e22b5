#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thetalat/appell_humbert.hpp"
#include "thetalat/jordan.hpp"

namespace thetalat {

// family E_n = E_base + n E_dom of alternating forms, restricted to the
// nondegenerate part L_1 of the dominating form
struct Pencil {
    AHData base;
    AHData dominating;
    IntMat l1_basis;     // columns: hyperbolic-pair basis of the dominating form
    IntMat e_base_l1;    // restriction of the base form to L_1
    IntMat e_dom_l1;     // restriction of the dominating form to L_1
    int g0 = 0;
};

// ker(dominating) ⊆ ker(base), checked on kernel_h basis vectors
bool is_dominated(const AHData& base, const AHData& dominating);

Pencil make_pencil(AHData base, AHData dominating);

// f(T) = det(e_base_l1 + T e_dom_l1); integer coefficients, low to high,
// degree 2(g - g0) with leading coefficient det(e_dom_l1) > 0
struct DetPolynomial {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& leading() const { return coeffs.back(); }
    Int eval(const Int& x) const;
};

DetPolynomial det_polynomial(const Pencil& p);

// positive integer roots of f
std::vector<Int> degenerate_set(const DetPolynomial& f);

// integer bound past which f is strictly increasing (Cauchy bound of f, f')
Int growth_bound(const DetPolynomial& f);

struct GrowthRow {
    Int n;
    bool degenerate = false;
    std::vector<Int> divisors;  // empty on degenerate rows
    Int jordan = 0;             // prod of divisors; 0 on degenerate rows
    Int f_n = 0;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
    DetPolynomial f;
    Int bound;  // growth_bound(f)
};

GrowthTable growth_table(const Pencil& p, int n_max, Exec exec = Exec::parallel);

struct HypothesisCheck {
    std::string name;
    std::string status;  // "pass", "assumed", "doubled"
};

struct CertificateOptions {
    bool assume_semipositive = false;  // gram-mode waiver
    int n_max = 12;
};

// structured record: hypothesis checks, the tensor family, the growth table
// and the strictly increasing subsequence of Jordan constants
struct Certificate {
    std::vector<HypothesisCheck> hypotheses;
    bool doubled = false;
    GrowthTable table;
    std::vector<std::pair<Int, Int>> increasing_jordans;  // (n, jordan_n)
    std::string analytic_note;
};

Certificate non_jordan_certificate(const AHData& base, const AHData& dominating,
                                   const CertificateOptions& opts = {});

std::string to_text(const Certificate& c);

}  // namespace thetalat
