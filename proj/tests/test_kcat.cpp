#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hm/kcat.hpp"

using namespace hm;

namespace {
std::shared_ptr<const KCategory> share(KCategory c) {
    return std::make_shared<const KCategory>(std::move(c));
}
}  // namespace

TEST_CASE("poset closure and cycle detection") {
    PosetSpec p;
    p.elements = {"a", "b", "c"};
    p.covers = {{"a", "b"}, {"b", "c"}};
    auto leq = poset_leq(p);
    CHECK(leq[0][2]);  // a <= c by transitivity
    CHECK_FALSE(leq[2][0]);
    p.covers.push_back({"c", "a"});
    CHECK_THROWS_AS(poset_leq(p), hm_error);
    try {
        poset_leq(p);
    } catch (const hm_error& e) {
        CHECK(e.code == "cycle-detected");
    }
}

TEST_CASE("incidence category of a chain validates and has the right homs") {
    auto res = corpus_generate(Family::Chain, {.a = 3}, FieldSpec::rationals());
    const KCategory& c = res.cat;
    CHECK(c.n_objects() == 3);
    CHECK(validate_category(c).passed());
    CHECK(c.dim(2, 0) == 1);  // x00 <= x02
    CHECK(c.dim(0, 2) == 0);
    CHECK(c.total_hom_dim() == 6);
    auto m = regular_bimodule(share(c));
    CHECK(validate_bimodule(m).passed());
}

TEST_CASE("validation flags a broken composition table") {
    auto res = corpus_generate(Family::Chain, {.a = 4}, FieldSpec::rationals());
    KCategory c = res.cat;
    // drop the middle composite x00 -> x02 while keeping longer ones:
    // (f3.f2).f1 stays nonzero but f3.(f2.f1) becomes zero
    c.comp.erase({2, 1, 0, 0, 0});
    auto rep = validate_category(c);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("monomial quiver category: path basis and zero relations") {
    QuiverSpec q;
    q.vertices = {"u", "v", "w"};
    q.arrows = {{"a", "u", "v"}, {"b", "v", "w"}};
    q.relations = {{"a", "b"}};
    q.max_path_length = 2;
    KCategory c = from_quiver_monomial(q, FieldSpec::prime(2));
    CHECK(validate_category(c).passed());
    int u = c.obj_index("u"), v = c.obj_index("v"), w = c.obj_index("w");
    CHECK(c.dim(v, u) == 1);
    CHECK(c.dim(w, v) == 1);
    CHECK(c.dim(w, u) == 0);  // killed by the relation
    // composite b.a is zero
    CHECK(c.compose(w, v, u, 0, 0) == Vec{});
}

TEST_CASE("monomial quiver with a loop is rejected as infinite dimensional") {
    QuiverSpec q;
    q.vertices = {"u"};
    q.arrows = {{"a", "u", "u"}};
    q.max_path_length = 4;
    try {
        from_quiver_monomial(q, FieldSpec::rationals());
        CHECK(false);
    } catch (const hm_error& e) {
        CHECK(e.code == "not-finite-dimensional");
    }
    // with a nilpotency relation it becomes finite
    q.relations = {{"a", "a"}};
    KCategory c = from_quiver_monomial(q, FieldSpec::rationals());
    CHECK(validate_category(c).passed());
    CHECK(c.dim(0, 0) == 2);
}

TEST_CASE("full subcategory restricts homs and composition") {
    auto res = corpus_generate(Family::Chain, {.a = 4}, FieldSpec::rationals());
    auto [sub, incl] = full_subcategory(res.cat, {"x00", "x02"});
    CHECK(sub.n_objects() == 2);
    CHECK(validate_category(sub).passed());
    CHECK(sub.dim(1, 0) == 1);
    auto m = regular_bimodule(share(res.cat));
    auto r = restrict_bimodule(m, share(sub), incl);
    CHECK(validate_bimodule(r).passed());
    CHECK(r.dim(1, 0) == 1);
}

TEST_CASE("expand with isomorphic object stays a category") {
    auto res = corpus_generate(Family::Chain, {.a = 2}, FieldSpec::prime(3));
    KCategory d = expand_with_isomorphic_object(res.cat, "x01");
    CHECK(d.n_objects() == 3);
    CHECK(validate_category(d).passed());
    int a = d.obj_index("x01"), b = d.obj_index("x01~iso");
    CHECK(d.dim(a, b) == 1);
    CHECK(d.dim(b, a) == 1);
    // the cross morphisms are mutually inverse
    Vec ab = d.compose(a, b, a, 0, 0);
    CHECK(ab == Vec{Rat(1)});
}

TEST_CASE("prune source or sink") {
    auto res = corpus_generate(Family::Chain, {.a = 3}, FieldSpec::rationals());
    KCategory pruned = prune_source_or_sink(res.cat, "x00");  // minimum: a source
    CHECK(pruned.n_objects() == 2);
    CHECK(validate_category(pruned).passed());
    // middle object of a 3-chain is neither source nor sink
    try {
        prune_source_or_sink(res.cat, "x01");
        CHECK(false);
    } catch (const hm_error& e) {
        CHECK(e.code == "not-a-source-or-sink");
    }
}

TEST_CASE("corpus families validate and have expected sizes") {
    auto crown = corpus_generate(Family::CrownIncidence, {.a = 2, .b = 3, .c = 0},
                                 FieldSpec::rationals());
    CHECK(crown.cat.n_objects() == 6);
    CHECK(validate_category(crown.cat).passed());

    auto radsq = corpus_generate(Family::CrownRadSq, {.a = 2, .b = 3, .c = 1},
                                 FieldSpec::prime(5));
    CHECK(validate_category(radsq.cat).passed());
    // radical square zero: every length-2 composite vanishes

    auto ul = corpus_generate(Family::ULayered, {.a = 3, .b = 1}, FieldSpec::rationals());
    CHECK(ul.cat.n_objects() == 6);
    CHECK(validate_category(ul.cat).passed());
    // complete bipartite comparabilities between the two levels
    long cross = 0;
    for (int y = 0; y < 6; ++y)
        for (int x = 0; x < 6; ++x)
            if (x != y && ul.cat.dim(y, x) > 0) ++cross;
    CHECK(cross == 9);

    auto agt = corpus_generate(Family::AGt, {.a = 4, .b = 1, .c = 1, .d = 2},
                               FieldSpec::rationals());
    CHECK(validate_category(agt.cat).passed());
    CHECK(agt.filtration.size() == 3);  // {rows 1,0}, +row -1, +row -2

    auto tree = corpus_generate(Family::RandomTree, {.a = 7, .seed = 42},
                                FieldSpec::rationals());
    CHECK(validate_category(tree.cat).passed());
    // same seed reproduces the same poset
    auto tree2 = corpus_generate(Family::RandomTree, {.a = 7, .seed = 42},
                                 FieldSpec::rationals());
    CHECK(tree.poset.covers == tree2.poset.covers);
}

TEST_CASE("crown parameters are validated") {
    try {
        corpus_generate(Family::CrownIncidence, {.a = 2, .b = 2, .c = 0}, FieldSpec::rationals());
        CHECK(false);
    } catch (const hm_error& e) {
        CHECK(e.code == "bad-params");
    }
}

TEST_CASE("filtrations are nested object sets") {
    auto ul = corpus_generate(Family::ULayered, {.a = 2, .b = 3}, FieldSpec::rationals());
    REQUIRE(ul.filtration.size() == 4);
    for (size_t i = 0; i + 1 < ul.filtration.size(); ++i) {
        for (const auto& o : ul.filtration[i]) {
            bool found = false;
            for (const auto& o2 : ul.filtration[i + 1])
                if (o2 == o) found = true;
            CHECK(found);
        }
    }
}
