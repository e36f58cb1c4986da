#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hm/io.hpp"

using namespace hm;
using hm::io::json;

namespace {

json chain_poset_spec(int n, const std::string& field_kind = "Q", long p = 0) {
    json file;
    file["field"] = p ? json{{"kind", "Fp"}, {"p", p}} : json{{"kind", field_kind}};
    json elems = json::array(), covers = json::array();
    for (int i = 0; i < n; ++i) elems.push_back("a" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        covers.push_back(json::array({"a" + std::to_string(i), "a" + std::to_string(i + 1)}));
    file["poset"] = json{{"elements", elems}, {"covers", covers}};
    return file;
}

json c2_group() {
    return json{{"names", {"1", "t"}}, {"table", {{0, 1}, {1, 0}}}};
}

bool same_category(const KCategory& a, const KCategory& b) {
    if (a.field != b.field || a.objects != b.objects || a.comp != b.comp) return false;
    if (a.homs.size() != b.homs.size()) return false;
    for (const auto& [key, hom] : a.homs) {
        auto it = b.homs.find(key);
        if (it == b.homs.end()) return false;
        if (hom.names != it->second.names || hom.id_index != it->second.id_index) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
    CHECK(io::parse_scalar(json("2/3")) == Rat(2, 3));
    CHECK(io::parse_scalar(json("-7")) == Rat(-7));
    CHECK(io::parse_scalar(json(5)) == Rat(5));
    CHECK(io::scalar_str(Rat(2, 3)) == "2/3");
    CHECK(io::scalar_str(Rat(-4)) == "-4");
    CHECK(io::parse_scalar(json("4/6")) == Rat(2, 3));  // canonicalized
    CHECK_THROWS_WITH_AS(io::parse_scalar(json("x")), doctest::Contains("parse-error"), hm_error);
    CHECK_THROWS_AS(io::parse_scalar(json(1.5)), hm_error);
}

TEST_CASE("field spec round trip") {
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)})
        CHECK(io::parse_field(io::field_json(f)) == f);
    CHECK_THROWS_AS(io::parse_field(json{{"kind", "R"}}), hm_error);
    CHECK_THROWS_AS(io::parse_field(json{{"kind", "Q"}, {"p", 3}}), hm_error);
    CHECK_THROWS_AS(io::parse_field(json{{"kind", "Fp"}, {"p", 4}}), hm_error);
}

TEST_CASE("poset and quiver category specs parse") {
    KCategory c = io::parse_category(chain_poset_spec(3));
    PosetSpec p{{"a0", "a1", "a2"}, {{"a0", "a1"}, {"a1", "a2"}}};
    CHECK(same_category(c, from_poset_incidence(p, FieldSpec::rationals())));

    json q;
    q["field"] = json{{"kind", "Fp"}, {"p", 3}};
    q["quiver"] = json{{"vertices", {"u", "v", "w"}},
                       {"arrows",
                        {json{{"name", "a"}, {"source", "u"}, {"target", "v"}},
                         json{{"name", "b"}, {"source", "v"}, {"target", "w"}}}},
                       {"relations", json::array({json::array({"a", "b"})})},
                       {"max_path_length", 2}};
    KCategory qc = io::parse_category(q);
    CHECK(validate_category(qc).passed());
    CHECK(qc.dim(qc.obj_index("w"), qc.obj_index("u")) == 0);  // relation kills ba
}

TEST_CASE("table form round-trips exactly") {
    for (auto file : {chain_poset_spec(4), chain_poset_spec(3, "Fp", 5)}) {
        KCategory c = io::parse_category(file);
        json table = io::category_json(c);
        KCategory back = io::parse_category(table);
        CHECK(same_category(c, back));
        CHECK(io::category_json(back).dump() == table.dump());  // byte-stable
    }
}

TEST_CASE("unknown keys are rejected everywhere") {
    json file = chain_poset_spec(3);
    file["extra"] = 1;
    CHECK_THROWS_WITH_AS(io::parse_category(file), doctest::Contains("extra"), hm_error);

    json inner = chain_poset_spec(3);
    inner["poset"]["color"] = "red";
    CHECK_THROWS_WITH_AS(io::parse_category(inner), doctest::Contains("color"), hm_error);

    json table = io::category_json(io::parse_category(chain_poset_spec(3)));
    table["table"]["homs"][0]["note"] = "hi";
    CHECK_THROWS_AS(io::parse_category(table), hm_error);

    json both = chain_poset_spec(3);
    both["table"] = table["table"];
    CHECK_THROWS_AS(io::parse_category(both), hm_error);  // two body forms

    json act;
    act["category"] = chain_poset_spec(2);
    act["group"] = c2_group();
    act["action"] = json{{"kind", "trivial"}, {"junk", 0}};
    CHECK_THROWS_WITH_AS(io::parse_action_file(act), doctest::Contains("junk"), hm_error);
}

TEST_CASE("action file round trip") {
    json file;
    file["category"] = chain_poset_spec(2);
    file["group"] = c2_group();
    file["action"] = json{{"kind", "trivial"}};
    GroupAction a = io::parse_action_file(file);
    CHECK(validate_action(a).passed());
    CHECK(a.group.order() == 2);

    json full = io::action_file_json(a);  // matrices form
    GroupAction b = io::parse_action_file(full);
    CHECK(validate_action(b).passed());
    CHECK(a.obj_perm == b.obj_perm);
    CHECK(a.hom_maps == b.hom_maps);
    CHECK(io::action_file_json(b).dump() == full.dump());
}

TEST_CASE("permutation action spec on an antichain") {
    json file;
    json cat;
    cat["field"] = json{{"kind", "Q"}};
    cat["poset"] = json{{"elements", {"p", "q"}}, {"covers", json::array()}};
    file["category"] = cat;
    file["group"] = c2_group();
    file["action"] = json{
        {"kind", "permutation"},
        {"obj_perms", json::array({json::array({"p", "q"}), json::array({"q", "p"})})}};
    GroupAction a = io::parse_action_file(file);
    CHECK(validate_action(a).passed());
    CHECK(a.obj(1, 0) == 1);
}

TEST_CASE("grading file round trip via a smash grading") {
    json file;
    file["category"] = chain_poset_spec(2);
    file["group"] = c2_group();
    file["action"] = json{{"kind", "trivial"}};
    SmashResult sp = smash_product(io::parse_action_file(file));

    json gf = io::grading_file_json(sp.grading);
    GradedCategory back = io::parse_grading_file(gf);
    CHECK(validate_grading(back).passed());
    CHECK(back.comps == sp.grading.comps);
    CHECK(strongly_graded_check(back).strongly_graded);
    CHECK(io::grading_file_json(back).dump() == gf.dump());
}

TEST_CASE("equivariant module file round trip") {
    json file;
    file["category"] = chain_poset_spec(2, "Fp", 3);
    file["group"] = c2_group();
    file["action"] = json{{"kind", "trivial"}};
    file["module"] = "regular";
    EquivariantBimodule m = io::parse_equivariant_file(file);
    CHECK(validate_equivariant(m).passed());

    json full = io::equivariant_file_json(m);  // explicit tables
    EquivariantBimodule back = io::parse_equivariant_file(full);
    CHECK(validate_equivariant(back).passed());
    CHECK(back.mod.spaces == m.mod.spaces);
    CHECK(back.mod.left == m.mod.left);
    CHECK(back.mod.right == m.mod.right);
    CHECK(back.tau == m.tau);
    CHECK(io::equivariant_file_json(back).dump() == full.dump());

    json bad = full;
    bad["tau"][0]["oops"] = 1;
    CHECK_THROWS_AS(io::parse_equivariant_file(bad), hm_error);
}

TEST_CASE("reports round-trip through their JSON text") {
    auto cat = std::make_shared<const KCategory>(io::parse_category(chain_poset_spec(3)));
    std::vector<long> dims = cohomology_dims(cat, regular_bimodule(cat), 3);
    json r = io::dims_json("cohomology", dims, true, cat->field);
    CHECK(r.at("dims") == json(std::vector<long>{1, 0, 0, 0}));
    CHECK(r.at("complex") == "normalized");
    CHECK(r.contains("field"));
    CHECK(json::parse(r.dump()).dump() == r.dump());
    CHECK(json::parse(r.dump(2)) == r);
}

TEST_CASE("aligned text rendering is deterministic and complete") {
    json r;
    r["report"] = "demo";
    r["passed"] = true;
    r["dims"] = {1, 0, 2};
    r["rows"] = json::array({json{{"degree", 0}, {"values", {2, 2}}, {"ok", true}},
                             json{{"degree", 1}, {"values", {0, 0}}, {"ok", false}}});
    std::string t1 = io::render_table(r);
    std::string t2 = io::render_table(r);
    CHECK(t1 == t2);
    CHECK(t1.find("report: demo") != std::string::npos);
    CHECK(t1.find("dims: [1, 0, 2]") != std::string::npos);
    CHECK(t1.find("degree") != std::string::npos);  // table header
    CHECK(t1.find("no") != std::string::npos);      // false rendered
}

TEST_CASE("load_file rejects missing and malformed input") {
    CHECK_THROWS_WITH_AS(io::load_file("/nonexistent/file.json"), doctest::Contains("parse-error"),
                         hm_error);
}
