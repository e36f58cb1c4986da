#pragma once

#include "hm/gsmash.hpp"
#include "hm/hochschild.hpp"

namespace hm {

// Bimodule with a compatible G-structure: linear maps tau_g : M(y,x) ->
// M(gy,gx) forming a group action that intertwines the morphism actions.
struct EquivariantBimodule {
    Bimodule mod;        // over action.base
    GroupAction action;  // G acting on the base category
    // tau[{g,y,x}]: columns of tau_g on M(y,x); missing key = zero space
    std::map<std::array<int, 3>, std::vector<Vec>> tau;

    Vec apply(int g, int y, int x, const Vec& m) const;
};

// tau_1 = id, tau_g tau_h = tau_gh, tau_g(f.m.f') = g(f).tau_g(m).g(f')
ValidationReport validate_equivariant(const EquivariantBimodule& m);
// regular bimodule with tau given by the action on morphisms
EquivariantBimodule regular_equivariant(const GroupAction& a);
// restrict the acting group to a subgroup
GroupAction restrict_action(const GroupAction& a, const SubgroupResult& z);

// B = M # kG as a bimodule over the base category: B(y,x) = sum_s M(y, sx),
// block s, with the adjoint G-structure sending block t at (y,x) into block
// sts^-1 at (sy,sx) via tau_s.
struct SmashBimodule {
    EquivariantBimodule total;
    // offset[{y,x}][s] = start of block s in B(y,x), -1 when the block is 0
    std::map<std::pair<int, int>, std::vector<long>> offset;

    int block_of(int y, int x, long index) const;  // which s owns a coordinate
};

SmashBimodule smash_bimodule(const EquivariantBimodule& m);

// the same spaces as a bimodule over the smash category sp.cat (for the
// regular equivariant module this is the regular bimodule of the smash)
Bimodule smash_dbimodule(const EquivariantBimodule& m, const SmashResult& sp);

// M.g : (y,x) -> M(y, gx), a plain bimodule over the base
Bimodule g_component(const EquivariantBimodule& m, int g);
// M.g with its Z(g)-structure (action restricted to the centralizer)
EquivariantBimodule g_component_equivariant(const EquivariantBimodule& m, int g);
// M_[g] = sum of M.g' over the conjugacy class, with the full G-structure
EquivariantBimodule class_component(const EquivariantBimodule& m, int cls);

// Left G-module on H^q(base, M) via cochain conjugation:
// (g.f)(a_1,...,a_q) = tau_g(f(g^-1 a_1, ..., g^-1 a_q)).
GModule cohomology_gmodule(const EquivariantBimodule& m, int q, long budget = kDefaultBudget);

// Right G-action on H^0(base, M#kG) from the inverse-pair decompositions:
// (m.h)_y = sum_i r_{i,y}(h) . m_{y_i} . l_{i,y}(h), computed through the
// smash-category bimodule dmod. Throws not-invariant if the result leaves
// the invariant families (must not happen on valid input).
GModule h0_action(const SmashBimodule& sb, const SmashResult& sp, const Bimodule& dmod,
                  const GaloisCertificate& cert);

struct CheckRow {
    int degree = 0;
    std::vector<long> values;
    bool ok = false;
};
struct CheckReport {
    std::vector<CheckRow> rows;
    bool passed() const;
};

// three columns per degree: dim H^q(c, M#kG), sum over classes of
// dim H^q(c, M_[g]), and sum over classes of [G:Z(g)] dim H^q(c, M.g)
CheckReport decomposition_check(const EquivariantBimodule& m, int nmax,
                                long budget = kDefaultBudget);
// homology analogue of the three columns
CheckReport homology_decomposition_check(const EquivariantBimodule& m, int nmax,
                                         long budget = kDefaultBudget);

struct E2Page {
    int pmax = 0, qmax = 0;
    std::vector<std::vector<long>> dims;  // dims[p][q] = dim H^p(G, H^q(c, M))
};

E2Page e2_page(const EquivariantBimodule& m, int pmax, int qmax, long budget = kDefaultBudget);

// char not dividing |G|: dim H^n(smash, M#kG) = dim of G-invariants of
// H^n(c, M#kG restricted); values per degree: lhs, invariants.
// Throws char-divides-order otherwise.
CheckReport collapse_check(const EquivariantBimodule& m, int nmax, long budget = kDefaultBudget);
// always valid: dim H^n(smash, M#kG) <= sum_{p+q=n} dim E2^{p,q};
// values per degree: lhs, bound
CheckReport bound_check(const EquivariantBimodule& m, int nmax, long budget = kDefaultBudget);

struct PhiReport {
    bool bijective = false;
    bool kg_linear = false;
    long domain_dim = 0;    // dim (M_[g])^C
    long codomain_dim = 0;  // [G:Z(g)] dim (M.g)^C
};

// explicit coinduction isomorphism phi : (M_[g])^C -> Hom_{kZ(g)}(kG, (M.g)^C)
PhiReport phi_check(const EquivariantBimodule& m, int g, long budget = kDefaultBudget);

}  // namespace hm
