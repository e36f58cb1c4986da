#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hm/kcat.hpp"

namespace hm {

inline constexpr long kDefaultBudget = 2000000;

// One basis element of a (co)chain space: an object tuple, a tuple of basis
// morphism indices, and a module basis index.
//
// Cochain degree n: objects (x0..xn), morphs g_i in hom(x_i -> x_{i-1}),
// module index into M(x0, xn). A cochain assigns to each such tuple a value;
// the coordinate indexed here is the coefficient of module basis vector m
// in the value at (objects, morphs).
//
// Chain degree n: objects (x1..x_{n+1}), morphs f_i in hom(x_i -> x_{i+1}),
// module index into M(x1, x_{n+1}).
struct TupleBasisElem {
    std::vector<int> objects;
    std::vector<int> morphs;
    int module_index;
};

struct DegreeBasis {
    std::vector<TupleBasisElem> elems;
    // key = objects ++ morphs, value = offset of module_index 0
    std::map<std::vector<int>, long> offset;
    long dim() const { return (long)elems.size(); }
};

struct Complex {
    bool cochain = true;
    bool normalized = false;
    std::shared_ptr<const KCategory> cat;
    const Bimodule* module = nullptr;  // not owned; caller keeps alive
    int nmax = 0;                      // (co)homology valid in degrees 0..nmax
    std::vector<DegreeBasis> basis;    // degrees 0..nmax+1
    // cochain: diff[n] : C^n -> C^{n+1} (rows = dim C^{n+1}), n = 0..nmax
    // chain:   diff[n] : C_{n+1} -> C_n (rows = dim C_n),     n = 0..nmax
    std::vector<SparseMatrix> diff;

    long dim(int n) const { return basis[(size_t)n].dim(); }
};

Complex build_cochain_complex(std::shared_ptr<const KCategory> c, const Bimodule& m, int nmax,
                              bool normalized, long budget = kDefaultBudget);
Complex build_chain_complex(std::shared_ptr<const KCategory> c, const Bimodule& m, int nmax,
                            bool normalized, long budget = kDefaultBudget);

struct HomologyResult {
    std::vector<long> dims;                     // degrees 0..nmax
    std::vector<std::vector<SparseVec>> reps;   // cocycle/cycle representatives per degree
    std::vector<std::vector<SparseVec>> images; // boundary space basis per degree
};

// Works for both cochain and chain complexes (reads cx.cochain).
HomologyResult homology_dims(const Complex& cx, bool with_reps = false);

std::vector<long> cohomology_dims(std::shared_ptr<const KCategory> c, const Bimodule& m,
                                  int nmax, bool normalized = true,
                                  long budget = kDefaultBudget);
std::vector<long> homology_dims(std::shared_ptr<const KCategory> c, const Bimodule& m, int nmax,
                                bool normalized = true, long budget = kDefaultBudget);

// Center: families (m_x) in M(x,x) commuting with every morphism. For the
// regular bimodule this is the categorical center; it equals H^0.
struct CenterResult {
    long dim;
    // each element: per object x, a Vec in M(x,x) coordinates
    std::vector<std::vector<Vec>> basis;
};
CenterResult center(std::shared_ptr<const KCategory> c, const Bimodule& m);

// Cup product of cocycle representatives for the regular bimodule. a lives in
// degree p, b in degree q of cx (both in cochain coordinates); result is a
// degree p+q cochain.
SparseVec cup_product(const Complex& cx, int p, const SparseVec& a, int q, const SparseVec& b);
SparseVec cup_unit(const Complex& cx);

// Simplicial cohomology of the order complex (strict chains) of a poset,
// with k coefficients, degrees 0..nmax.
std::vector<long> order_complex_cohomology(const PosetSpec& p, FieldSpec field, int nmax);

}  // namespace hm
