#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hm/sparse.hpp"

namespace hm {

// Hom space basis for one ordered pair of objects. Endo homs carry the
// index of their identity element.
struct Hom {
    std::vector<std::string> names;
    int id_index = -1;
    long dim() const { return (long)names.size(); }
};

// Finite k-linear category by structure constants. homs[{y,x}] is the space
// of morphisms x -> y; comp keys are (z, y, x, f, g) for f: y->z, g: x->y
// and missing keys mean the composite is zero.
struct KCategory {
    FieldSpec field;
    std::vector<std::string> objects;  // sorted, duplicate-free
    std::map<std::pair<int, int>, Hom> homs;
    std::map<std::array<int, 5>, Vec> comp;

    long n_objects() const { return (long)objects.size(); }
    int obj_index(const std::string& name) const;  // throws unknown-object
    long dim(int y, int x) const;
    const Hom* hom(int y, int x) const;
    int identity_index(int x) const;
    Vec compose(int z, int y, int x, int f, int g) const;
    void set_comp(int z, int y, int x, int f, int g, const Vec& v);
    long total_hom_dim() const;
    long nonidentity_dim(int y, int x) const;
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
    std::string summary() const;
};

ValidationReport validate_category(const KCategory& c);

// C-bimodule over a base category. dims[{y,x}] is dim of yMx (absent = 0).
// left[{y2,y,x}][f][m] = coordinates of f.m in M(y2,x) for f: y -> y2;
// right[{y,x1,x2}][m][f] = coordinates of m.f in M(y,x2) for f: x2 -> x1.
// Missing action tables denote the zero map.
struct Bimodule {
    std::shared_ptr<const KCategory> base;
    std::map<std::pair<int, int>, std::vector<std::string>> spaces;
    std::map<std::array<int, 3>, std::vector<std::vector<Vec>>> left;
    std::map<std::array<int, 3>, std::vector<std::vector<Vec>>> right;

    long dim(int y, int x) const;
    Vec act_left(int y2, int y, int x, int f, const Vec& m) const;
    Vec act_right(int y, int x1, int x2, const Vec& m, int f) const;
};

ValidationReport validate_bimodule(const Bimodule& m);
Bimodule regular_bimodule(std::shared_ptr<const KCategory> c);
Bimodule zero_bimodule(std::shared_ptr<const KCategory> c);

struct PosetSpec {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;  // (a, b): a < b
};

// Reflexive-transitive closure of the covers; throws cycle-detected.
std::vector<std::vector<bool>> poset_leq(const PosetSpec& p);

struct QuiverArrow {
    std::string name, source, target;
};

struct QuiverSpec {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<std::vector<std::string>> relations;  // arrow paths (traversal order), length >= 2
    int max_path_length = 1;
};

KCategory from_poset_incidence(const PosetSpec& p, FieldSpec field);
KCategory from_quiver_monomial(const QuiverSpec& q, FieldSpec field);

struct Inclusion {
    std::vector<int> object_map;  // subcategory object index -> parent index
};

std::pair<KCategory, Inclusion> full_subcategory(const KCategory& c,
                                                 const std::vector<std::string>& objects);
Bimodule restrict_bimodule(const Bimodule& m, std::shared_ptr<const KCategory> sub,
                           const Inclusion& incl);

KCategory expand_with_isomorphic_object(const KCategory& c, const std::string& x);
KCategory prune_source_or_sink(const KCategory& c, const std::string& x);
bool is_source_or_sink(const KCategory& c, int x);

// Corpus families from the infinite-quiver examples, rendered at finite size.
enum class Family { Chain, Antichain, RandomTree, CrownIncidence, CrownRadSq, ULayered, AGt };

struct CorpusParams {
    long a = 0, b = 0, c = 0, d = 0;  // family-specific, see corpus_generate
    unsigned seed = 1;
};

struct CorpusResult {
    KCategory cat;
    PosetSpec poset;  // meaningful when poset_derived
    bool poset_derived = false;
    // canonical nested object filtration (growing prefixes), for tower use
    std::vector<std::vector<std::string>> filtration;
};

// chain(n): a=n. antichain(n): a=n. random-tree(n): a=n with seed.
// crown-incidence/crown-radsq(rows, n, extra): a=rows, b=n, c=extra (n >= 3).
// u-layered(n, m): a=n columns, b=m top level (m+1 levels).
// a-gt(n, t, t', depth): a=n, b=t, c=t', d=depth (cyclic rows below 0).
CorpusResult corpus_generate(Family family, const CorpusParams& p, FieldSpec field);

Family family_from_name(const std::string& name);
std::string family_name(Family f);

}  // namespace hm
