#pragma once

#include "hm/group.hpp"

namespace hm {

// G-grading on a k-linear category: each hom space decomposes as a direct
// sum of degree components. comps[{y,x}][g] lists basis vectors (in
// hom(x -> y) coordinates) of the degree-g component.
struct GradedCategory {
    std::shared_ptr<const KCategory> base;
    FiniteGroup group;
    std::map<std::pair<int, int>, std::vector<std::vector<Vec>>> comps;

    const std::vector<Vec>& component(int y, int x, int g) const;
    long comp_dim(int y, int x, int g) const;
    // matrices projecting hom(x -> y) onto its degree-g part (hom coords)
    std::vector<Vec> graded_parts(int y, int x, const Vec& v) const;  // per degree
};

// components span each hom, are independent, composition adds degrees,
// identities have degree 1
ValidationReport validate_grading(const GradedCategory& g);

struct SmashResult {
    std::shared_ptr<const KCategory> cat;  // D = C # kG
    GradedCategory grading;
    // basis bookkeeping: for hom_D(x -> y), the block of degree s has basis
    // indexed by hom_C(s.x -> y); offset[{y,x}][s] is its starting index
    std::map<std::pair<int, int>, std::vector<long>> offset;
};

// Smash product as the skew category: hom_D(x,y) = sum_s hom_C(s.x, y), with
// (f, t) o (g, s) = f o t(g) in degree ts. Reduces to hom_C(x,y) (x) kG when
// the action fixes objects.
SmashResult smash_product(const GroupAction& action);

// Degree-1 component category of a grading (coinvariants). For a smash
// grading this recovers the original category.
KCategory coinvariants(const GradedCategory& g);

struct StronglyGradedReport {
    bool strongly_graded = true;
    // witness on failure
    std::string witness;
};

// Full criterion: sum_y D^s(z<-y) . D^t(y<-x) = D^{st}(z<-x) for all x, z, s, t.
StronglyGradedReport strongly_graded_full(const GradedCategory& g);
// Reduced criterion: sum_y D^{s^-1}(x<-y) . D^s(y<-x) = D^1(x<-x) for all x, s.
StronglyGradedReport strongly_graded_check(const GradedCategory& g);

// The tensor square D (x)_C D at one object pair, materialized as a quotient
// of sum_z hom(z->x) (x) hom(y->z) by the middle-action relations.
struct TensorQuot {
    long ambient = 0;
    std::vector<long> slot_offset;             // per middle object z
    std::vector<SparseVec> relation_rows;      // mutually reduced (RREF) rows
    std::vector<long> quot_cols;               // ambient coords forming the quotient basis
    std::map<long, long> quot_index;           // ambient coord -> quotient coord
    Vec project(const SparseVec& ambient_vec, const Field& f) const;
};

// One inverse-pair family: 1_x = sum_i c_i . d_i with c_i of degree s^-1
// in hom(y_i -> x) and d_i of degree s in hom(x -> y_i).
struct RLPair {
    int y;
    Vec r;  // element of hom(y -> x), degree s^-1 (includes its coefficient)
    Vec l;  // basis element of hom(x -> y), degree s
};

struct GaloisCertificate {
    bool galois = true;
    std::string witness;
    // per object pair (x, y): the tensor quotient and the beta matrix
    // (rows = dim hom(y->x) * |G|, grouped by degree; cols = quotient basis)
    std::map<std::pair<int, int>, TensorQuot> tensors;
    std::map<std::pair<int, int>, SparseMatrix> beta;
    std::map<std::pair<int, int>, SparseMatrix> beta_prime;
    // rl[{x, h}] decomposes 1_x through degree h^-1 / degree h pairs
    std::map<std::pair<int, int>, std::vector<RLPair>> rl;
};

GaloisCertificate galois_check(const GradedCategory& g);

struct PropertyReport {
    std::vector<std::pair<std::string, bool>> properties;  // name, verified
    bool all_hold() const;
};

// The seven structural identities of the r/l decomposition (unit image,
// cocycle coherence, centrality, degree purity, module compatibility,
// counit, and the inverse formula for beta).
PropertyReport properties_check(const GradedCategory& g, const GaloisCertificate& cert);

}  // namespace hm
