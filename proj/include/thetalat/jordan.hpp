#pragma once

#include <cstdint>
#include <vector>

#include "thetalat/appell_humbert.hpp"
#include "thetalat/heisenberg.hpp"
#include "thetalat/lattice_forms.hpp"
#include "thetalat/theta_group.hpp"

namespace thetalat {

enum class Exec { serial, parallel };

// multiplication table of a finite group; the constructor verifies the group
// axioms (identity, inverses, cancellation, associativity)
struct FiniteGroupTable {
    int n = 0;
    std::vector<int32_t> mul;  // row-major n x n
    int identity = 0;
    std::vector<int32_t> inv;

    int at(int i, int j) const { return mul[static_cast<size_t>(i) * n + j]; }

    static FiniteGroupTable from_mul(int n, std::vector<int32_t> mul);
};

FiniteGroupTable make_table(const HeisenbergGroup& h);

// table of a finite subset of the theta group; throws when the set is not
// closed under multiplication
FiniteGroupTable make_table(const ThetaGroup& g, const std::vector<ThetaElement>& elems);

struct Subgroup {
    std::vector<int> elems;            // sorted
    std::vector<uint64_t> mask;        // bitset over the ambient group
    std::vector<int> generators;       // greedy generating set

    int order() const { return static_cast<int>(elems.size()); }
};

// every subgroup, found by closing generator sets one element at a time
// until the lattice stabilizes; canonical order (size, then elements)
std::vector<Subgroup> all_subgroups(const FiniteGroupTable& g);

struct JordanReport {
    Int constant = 1;
    std::vector<int> witness_subgroup;        // generators achieving the max
    std::vector<int> witness_abelian_normal;  // generators achieving the min index
};

// max over subgroups B of the minimal index of an abelian normal subgroup;
// the result is schedule-independent
JordanReport brute_force_jordan(const FiniteGroupTable& g, int max_order = 512,
                                Exec exec = Exec::parallel);

// prod d_i(E); equals 1 in the Pic^0 regime
Int jordan_constant(const AHData& d);

// generators of the standard maximal isotropic subgroup (the a-coordinates)
std::vector<IntVec> maximal_isotropic(const DiscriminantGroup& d);

// subgroup generated inside the discriminant group
std::vector<IntVec> subgroup_closure(const DiscriminantGroup& d,
                                     const std::vector<IntVec>& gens);

// all isotropic subgroups as element lists; throws when |D| exceeds the bound
std::vector<std::vector<IntVec>> isotropic_subgroups(const DiscriminantGroup& d,
                                                     const Int& bound = Int(4096),
                                                     Exec exec = Exec::parallel);

// checks n^2 | prod(d_i)^2 and n | prod(d_i) under the hypothesis nZ ⊇ E(L,L)
bool divisibility_bound(const AlternatingForm& f, const Int& n);

}  // namespace thetalat
