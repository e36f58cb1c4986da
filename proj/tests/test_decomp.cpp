#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hm/decomp.hpp"

using namespace hm;

namespace {

std::shared_ptr<KCategory> chain_cat(long n, const FieldSpec& f) {
    PosetSpec p;
    for (long i = 0; i < n; ++i) p.elements.push_back("v" + std::to_string(i));
    for (long i = 0; i + 1 < n; ++i)
        p.covers.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1)});
    return std::make_shared<KCategory>(from_poset_incidence(p, f));
}

std::shared_ptr<KCategory> crown_cat(const FieldSpec& f) {
    PosetSpec p;
    for (int i = 0; i < 3; ++i) p.elements.push_back("a" + std::to_string(i));
    for (int i = 0; i < 3; ++i) p.elements.push_back("b" + std::to_string(i));
    for (int i = 0; i < 3; ++i) {
        p.covers.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
        p.covers.push_back({"a" + std::to_string(i), "b" + std::to_string((i + 1) % 3)});
    }
    return std::make_shared<KCategory>(from_poset_incidence(p, f));
}

GroupAction crown_rotation(const std::shared_ptr<const KCategory>& c) {
    FiniteGroup g = FiniteGroup::cyclic(3);
    std::vector<std::vector<int>> perm(3, std::vector<int>((size_t)c->n_objects()));
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) {
            perm[(size_t)k][(size_t)c->obj_index("a" + std::to_string(i))] =
                c->obj_index("a" + std::to_string((i + k) % 3));
            perm[(size_t)k][(size_t)c->obj_index("b" + std::to_string(i))] =
                c->obj_index("b" + std::to_string((i + k) % 3));
        }
    return permutation_action(c, g, perm);
}

GroupAction s3_antichain(const std::shared_ptr<const KCategory>& c) {
    auto s3 = FiniteGroup::symmetric3();
    std::vector<std::vector<int>> perm = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                          {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    return permutation_action(c, s3, perm);
}

}  // namespace

TEST_CASE("equivariant bimodules validate and M#kG has block dimensions") {
    auto c = chain_cat(3, FieldSpec::rationals());
    auto act = trivial_action(c, FiniteGroup::cyclic(2));
    auto em = regular_equivariant(act);
    CHECK(validate_equivariant(em).passed());
    auto sb = smash_bimodule(em);
    CHECK(validate_bimodule(sb.total.mod).passed());
    CHECK(validate_equivariant(sb.total).passed());
    for (long y = 0; y < c->n_objects(); ++y)
        for (long x = 0; x < c->n_objects(); ++x)
            CHECK(sb.total.mod.dim((int)y, (int)x) == 2 * c->dim((int)y, (int)x));
    // trivial group: M # k1 = M
    auto em1 = regular_equivariant(trivial_action(c, FiniteGroup::trivial()));
    auto sb1 = smash_bimodule(em1);
    for (long y = 0; y < c->n_objects(); ++y)
        for (long x = 0; x < c->n_objects(); ++x)
            CHECK(sb1.total.mod.dim((int)y, (int)x) == c->dim((int)y, (int)x));
}

TEST_CASE("M#kG over the smash category is its regular bimodule") {
    auto c = crown_cat(FieldSpec::rationals());
    auto act = crown_rotation(c);
    auto em = regular_equivariant(act);
    CHECK(validate_equivariant(em).passed());
    auto sp = smash_product(act);
    Bimodule n = smash_dbimodule(em, sp);
    CHECK(validate_bimodule(n).passed());
    Bimodule reg = regular_bimodule(sp.cat);
    REQUIRE(n.spaces == reg.spaces);
    CHECK(n.left == reg.left);
    CHECK(n.right == reg.right);
}

TEST_CASE("class components partition M#kG") {
    auto c = std::make_shared<KCategory>(
        corpus_generate(Family::Antichain, {3, 0, 0, 0}, FieldSpec::rationals()).cat);
    auto act = s3_antichain(c);
    auto em = regular_equivariant(act);
    auto sb = smash_bimodule(em);
    const auto& G = act.group;
    for (long y = 0; y < c->n_objects(); ++y)
        for (long x = 0; x < c->n_objects(); ++x) {
            long total = 0;
            for (int cls = 0; cls < (int)G.conj_classes.size(); ++cls)
                total += class_component(em, cls).mod.dim((int)y, (int)x);
            CHECK(total == sb.total.mod.dim((int)y, (int)x));
        }
    // class components validate as equivariant modules over the full group
    for (int cls = 0; cls < (int)G.conj_classes.size(); ++cls)
        CHECK(validate_equivariant(class_component(em, cls)).passed());
    // abelian group: class components are single-element components
    auto act2 = trivial_action(c, FiniteGroup::cyclic(2));
    auto em2 = regular_equivariant(act2);
    for (int g = 0; g < 2; ++g)
        CHECK(class_component(em2, g).mod.dim(0, 0) == g_component(em2, g).dim(0, 0));
    // g = unit gives back M
    CHECK(g_component(em, 0).dim(0, 0) == em.mod.dim(0, 0));
    CHECK_THROWS_AS(g_component(em, 99), hm_error);
}

TEST_CASE("cochain conjugation gives a G-module on cohomology") {
    auto c = crown_cat(FieldSpec::rationals());
    auto act = crown_rotation(c);
    auto em = regular_equivariant(act);
    auto sb = smash_bimodule(em);
    for (int q = 0; q <= 1; ++q) {
        GModule v = cohomology_gmodule(sb.total, q);
        CHECK(validate_gmodule(v).passed());
    }
    // the trivial action on a chain gives the trivial module in degree 0
    auto c2 = chain_cat(2, FieldSpec::rationals());
    auto em2 = regular_equivariant(trivial_action(c2, FiniteGroup::cyclic(2)));
    GModule v0 = cohomology_gmodule(em2, 0);
    CHECK(v0.dim == 1);
    CHECK(invariants_dim(v0) == 1);
}

TEST_CASE("h0 action: inverse-pair formula equals conjugation") {
    struct Instance {
        std::shared_ptr<const KCategory> c;
        GroupAction act;
    };
    std::vector<Instance> instances;
    {
        auto c = chain_cat(2, FieldSpec::rationals());
        instances.push_back({c, trivial_action(c, FiniteGroup::cyclic(2))});
    }
    {
        auto c = crown_cat(FieldSpec::rationals());
        instances.push_back({c, crown_rotation(c)});
    }
    {
        auto c = chain_cat(1, FieldSpec::prime(3));
        instances.push_back({c, trivial_action(c, FiniteGroup::cyclic(2))});
    }
    for (const auto& inst : instances) {
        auto em = regular_equivariant(inst.act);
        auto sp = smash_product(inst.act);
        auto sb = smash_bimodule(em);
        auto dmod = smash_dbimodule(em, sp);
        auto cert = galois_check(sp.grading);
        REQUIRE(cert.galois);
        GModule right = h0_action(sb, sp, dmod, cert);
        CHECK(right.right_module);
        CHECK(validate_gmodule(right).passed());
        GModule conj = cohomology_gmodule(sb.total, 0);
        GModule left = right_to_left(right);
        REQUIRE(left.dim == conj.dim);
        CHECK(left.act == conj.act);
        // fixed points of the action = H^0 of the smash category
        long h0d = cohomology_dims(sp.cat, dmod, 0)[0];
        CHECK(invariants_dim(conj) == h0d);
    }
}

TEST_CASE("three-column decomposition agreement") {
    // one-object k, G = C2, char 0: degree 0 gives 2 = 1 + 1
    {
        auto c = chain_cat(1, FieldSpec::rationals());
        auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
        auto rep = decomposition_check(em, 2);
        CHECK(rep.passed());
        CHECK(rep.rows[0].values == std::vector<long>{2, 2, 2});
    }
    // chain with C2, crown with C3, antichain with S3
    {
        auto c = chain_cat(3, FieldSpec::rationals());
        auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
        CHECK(decomposition_check(em, 2).passed());
    }
    {
        auto c = crown_cat(FieldSpec::rationals());
        auto em = regular_equivariant(crown_rotation(c));
        CHECK(decomposition_check(em, 2).passed());
    }
    {
        auto c = std::make_shared<KCategory>(
            corpus_generate(Family::Antichain, {3, 0, 0, 0}, FieldSpec::prime(5)).cat);
        auto em = regular_equivariant(s3_antichain(c));
        CHECK(decomposition_check(em, 2).passed());
    }
    // homology analogue
    {
        auto c = chain_cat(1, FieldSpec::rationals());
        auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
        auto rep = homology_decomposition_check(em, 2);
        CHECK(rep.passed());
        CHECK(rep.rows[0].values == std::vector<long>{2, 2, 2});
    }
    {
        auto c = chain_cat(2, FieldSpec::rationals());
        auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
        CHECK(homology_decomposition_check(em, 2).passed());
    }
}

TEST_CASE("E2 page shapes") {
    // trivial group: p = 0 row recovers cohomology, higher rows vanish
    auto c = crown_cat(FieldSpec::rationals());
    auto em = regular_equivariant(trivial_action(c, FiniteGroup::trivial()));
    auto page = e2_page(em, 2, 2);
    auto hh = cohomology_dims(c, em.mod, 2);
    for (int q = 0; q <= 2; ++q) {
        CHECK(page.dims[0][(size_t)q] == hh[(size_t)q]);
        CHECK(page.dims[1][(size_t)q] == 0);
        CHECK(page.dims[2][(size_t)q] == 0);
    }
    // char 0: columns vanish for p >= 1 (Maschke)
    auto em2 = regular_equivariant(crown_rotation(c));
    auto page2 = e2_page(smash_bimodule(em2).total, 2, 1);
    for (int q = 0; q <= 1; ++q) {
        CHECK(page2.dims[1][(size_t)q] == 0);
        CHECK(page2.dims[2][(size_t)q] == 0);
    }
}

TEST_CASE("collapse: smash cohomology equals invariants in coprime characteristic") {
    {
        auto c = chain_cat(2, FieldSpec::rationals());
        auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
        auto rep = collapse_check(em, 2);
        CHECK(rep.passed());
    }
    {
        auto c = crown_cat(FieldSpec::rationals());
        auto em = regular_equivariant(crown_rotation(c));
        auto rep = collapse_check(em, 2);
        CHECK(rep.passed());
    }
    // modular characteristic is rejected
    {
        auto c = chain_cat(1, FieldSpec::prime(2));
        auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
        CHECK_THROWS_WITH_AS(collapse_check(em, 1), doctest::Contains("characteristic"),
                             hm_error);
    }
}

TEST_CASE("E2 bound in modular characteristic: kC2 over F2") {
    auto c = chain_cat(1, FieldSpec::prime(2));
    auto em = regular_equivariant(trivial_action(c, FiniteGroup::cyclic(2)));
    auto rep = bound_check(em, 3);
    CHECK(rep.passed());
    // the smash category is kC2 = F2[x]/x^2; its Hochschild cohomology is
    // 2-dimensional in every degree and the bound is met with equality
    for (const auto& row : rep.rows) {
        CHECK(row.values[0] == 2);
        CHECK(row.values[1] == 2);
    }
}

TEST_CASE("phi: explicit coinduction isomorphism") {
    // S3 on the antichain, g a transposition (index 1) and a 3-cycle (index 4)
    auto c = std::make_shared<KCategory>(
        corpus_generate(Family::Antichain, {3, 0, 0, 0}, FieldSpec::rationals()).cat);
    auto em = regular_equivariant(s3_antichain(c));
    for (int g : {0, 1, 4}) {
        auto rep = phi_check(em, g);
        CHECK(rep.bijective);
        CHECK(rep.kg_linear);
        CHECK(rep.domain_dim == rep.codomain_dim);
    }
    // crown rotation, both generators
    auto cc = crown_cat(FieldSpec::rationals());
    auto em2 = regular_equivariant(crown_rotation(cc));
    for (int g : {0, 1, 2}) {
        auto rep = phi_check(em2, g);
        CHECK(rep.bijective);
        CHECK(rep.kg_linear);
    }
}

TEST_CASE("Shapiro dimension identity on corpus modules") {
    auto c = std::make_shared<KCategory>(
        corpus_generate(Family::Antichain, {3, 0, 0, 0}, FieldSpec::prime(3)).cat);
    auto em = regular_equivariant(s3_antichain(c));
    const auto& G = em.action.group;
    for (int cls = 0; cls < (int)G.conj_classes.size(); ++cls) {
        int g = G.conj_classes[(size_t)cls][0];
        auto mg = g_component_equivariant(em, g);
        GModule v = cohomology_gmodule(mg, 0);
        auto z = subgroup(G, G.centralizers[(size_t)g]);
        GModule co = coinduced_module(v, z.elem_map, G);
        CHECK(group_cohomology(co, 2) == group_cohomology(v, 2));
    }
}
