#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hm/kcat.hpp"

namespace hm {

// Finite group by multiplication table; element 0 is the unit.
struct FiniteGroup {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    std::vector<int> inverse;
    std::vector<std::vector<int>> conj_classes;    // sorted, ordered by minimal element
    std::vector<std::vector<int>> centralizers;    // per element, sorted

    int order() const { return (int)names.size(); }
    int mul(int a, int b) const { return table[(size_t)a][(size_t)b]; }
    int inv(int a) const { return inverse[(size_t)a]; }
    int conj(int s, int g) const { return mul(mul(s, g), inv(s)); }  // s g s^-1
    int elem_index(const std::string& name) const;
    int class_of(int g) const;
    // right coset representatives of Z(g)\G, minimal indices, starting with 1
    std::vector<int> coset_reps(int g) const;

    static FiniteGroup from_table(std::vector<std::string> names,
                                  std::vector<std::vector<int>> table);
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric3();
};

// Subgroup on the given elements (must be closed); names are inherited and
// elem_map[i] gives the parent index of subgroup element i.
struct SubgroupResult {
    FiniteGroup group;
    std::vector<int> elem_map;
};
SubgroupResult subgroup(const FiniteGroup& g, std::vector<int> elements);

// Action of G on a k-linear category by automorphisms: per element an object
// permutation and per nonzero hom a matrix (columns = images of basis
// vectors, in hom(g.x -> g.y) coordinates).
struct GroupAction {
    std::shared_ptr<const KCategory> base;
    FiniteGroup group;
    std::vector<std::vector<int>> obj_perm;                              // per element
    std::vector<std::map<std::pair<int, int>, std::vector<Vec>>> hom_maps;  // per element

    Vec apply(int g, int y, int x, const Vec& v) const;  // hom(x->y) -> hom(gx->gy)
    int obj(int g, int x) const { return obj_perm[(size_t)g][(size_t)x]; }
};

ValidationReport validate_action(const GroupAction& a);
GroupAction trivial_action(std::shared_ptr<const KCategory> c, FiniteGroup g);
// Object permutation action for categories whose hom spaces are at most
// 1-dimensional (incidence and single-arrow quiver categories): each basis
// vector maps to the basis vector of the image hom.
GroupAction permutation_action(std::shared_ptr<const KCategory> c, FiniteGroup g,
                               const std::vector<std::vector<int>>& obj_perm);

// G-module: finite-dimensional k-vector space with action matrices
// (columns = images of basis vectors). A left module unless stated otherwise.
struct GModule {
    FieldSpec field;
    FiniteGroup group;
    long dim = 0;
    std::vector<std::vector<Vec>> act;  // per element, act[g][j] = image of e_j
    bool right_module = false;          // if set, act[g] acts on the right
    Vec apply(int g, const Vec& v) const;
};

ValidationReport validate_gmodule(const GModule& m);
GModule trivial_gmodule(FieldSpec f, FiniteGroup g, long dim);
// convert a right module (matrices of m acting on the right) to the left
// module with g.v := v.g^{-1}
GModule right_to_left(const GModule& right_mod);

// Group cohomology H^p(G, V) for p = 0..pmax via the inhomogeneous bar complex.
std::vector<long> group_cohomology(const GModule& v, int pmax);

// Coinduced module Hom_{kZ}(kG, V) for a subgroup Z <= G given by its element
// list; represented by values on the right coset representatives of Z\G.
GModule coinduced_module(const GModule& v_over_z, const std::vector<int>& z_elements,
                         const FiniteGroup& g);

long invariants_dim(const GModule& v);

}  // namespace hm
