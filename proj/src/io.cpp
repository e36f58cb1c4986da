#include "hm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hm::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw hm_error("parse-error", msg); }

const json& need(const json& j, const char* key, const char* ctx) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string(ctx) + ": missing key \"" + key + "\"");
    return j.at(key);
}

void allow_keys(const json& j, std::initializer_list<const char*> keys, const char* ctx) {
    if (!j.is_object()) bad(std::string(ctx) + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            if (it.key() == k) known = true;
        if (!known) bad(std::string(ctx) + ": unknown key \"" + it.key() + "\"");
    }
}

std::string need_str(const json& j, const char* key, const char* ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_string()) bad(std::string(ctx) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

long need_int(const json& j, const char* key, const char* ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_number_integer()) bad(std::string(ctx) + ": \"" + key + "\" must be an integer");
    return v.get<long>();
}

const json& need_array(const json& j, const char* key, const char* ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_array()) bad(std::string(ctx) + ": \"" + key + "\" must be an array");
    return v;
}

std::vector<std::string> str_list(const json& a, const char* ctx) {
    if (!a.is_array()) bad(std::string(ctx) + ": expected an array of strings");
    std::vector<std::string> out;
    for (const json& e : a) {
        if (!e.is_string()) bad(std::string(ctx) + ": expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<int> int_list(const json& a, const char* ctx) {
    if (!a.is_array()) bad(std::string(ctx) + ": expected an array of integers");
    std::vector<int> out;
    for (const json& e : a) {
        if (!e.is_number_integer()) bad(std::string(ctx) + ": expected an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

Vec parse_vec(const json& a, const Field& f, const char* ctx) {
    if (!a.is_array()) bad(std::string(ctx) + ": expected an array of scalars");
    Vec v;
    for (const json& e : a) v.push_back(f.normalize(parse_scalar(e)));
    return v;
}

// columns = images of basis vectors, each of the given length
std::vector<Vec> parse_matrix(const json& a, const Field& f, long col_len, const char* ctx) {
    if (!a.is_array()) bad(std::string(ctx) + ": expected an array of columns");
    std::vector<Vec> cols;
    for (const json& c : a) {
        Vec v = parse_vec(c, f, ctx);
        if ((long)v.size() != col_len)
            bad(std::string(ctx) + ": column length " + std::to_string(v.size()) +
                ", expected " + std::to_string(col_len));
        cols.push_back(std::move(v));
    }
    return cols;
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(scalar_str(x));
    return a;
}

json matrix_json(const std::vector<Vec>& cols) {
    json a = json::array();
    for (const Vec& c : cols) a.push_back(vec_json(c));
    return a;
}

int obj_of(const KCategory& c, const json& j, const char* key, const char* ctx) {
    return c.obj_index(need_str(j, key, ctx));
}

int morph_of(const KCategory& c, int y, int x, const std::string& name, const char* ctx) {
    const Hom* h = c.hom(y, x);
    if (h)
        for (long i = 0; i < h->dim(); ++i)
            if (h->names[(size_t)i] == name) return (int)i;
    bad(std::string(ctx) + ": unknown morphism \"" + name + "\" in hom(" + c.objects[(size_t)x] +
        " -> " + c.objects[(size_t)y] + ")");
}

FiniteGroup parse_group(const json& j) {
    allow_keys(j, {"names", "table"}, "group");
    std::vector<std::string> names = str_list(need_array(j, "names", "group"), "group.names");
    std::vector<std::vector<int>> table;
    for (const json& row : need_array(j, "table", "group"))
        table.push_back(int_list(row, "group.table"));
    try {
        return FiniteGroup::from_table(std::move(names), std::move(table));
    } catch (const hm_error& e) {
        bad(std::string("group: ") + e.what());
    }
}

json group_json(const FiniteGroup& g) {
    json j;
    j["names"] = g.names;
    j["table"] = g.table;
    return j;
}

GroupAction parse_action_body(std::shared_ptr<const KCategory> cat, FiniteGroup group,
                              const json& j) {
    std::string kind = need_str(j, "kind", "action");
    if (kind == "trivial") {
        allow_keys(j, {"kind"}, "action");
        return trivial_action(cat, std::move(group));
    }
    std::vector<std::vector<int>> perms;
    const json& pj = need_array(j, "obj_perms", "action");
    if ((int)pj.size() != group.order()) bad("action: one object permutation per group element");
    for (const json& row : pj) {
        std::vector<int> p;
        for (const std::string& name : str_list(row, "action.obj_perms"))
            p.push_back(cat->obj_index(name));
        perms.push_back(std::move(p));
    }
    if (kind == "permutation") {
        allow_keys(j, {"kind", "obj_perms"}, "action");
        return permutation_action(cat, std::move(group), perms);
    }
    if (kind != "matrices") bad("action: unknown kind \"" + kind + "\"");
    allow_keys(j, {"kind", "obj_perms", "hom_maps"}, "action");
    Field f(cat->field);
    GroupAction a;
    a.base = cat;
    a.group = std::move(group);
    a.obj_perm = std::move(perms);
    a.hom_maps.resize((size_t)a.group.order());
    const json& hj = need_array(j, "hom_maps", "action");
    if ((int)hj.size() != a.group.order()) bad("action: one hom_maps list per group element");
    for (int g = 0; g < a.group.order(); ++g) {
        if (!hj[(size_t)g].is_array()) bad("action.hom_maps: expected arrays of entries");
        for (const json& e : hj[(size_t)g]) {
            allow_keys(e, {"target", "source", "matrix"}, "action.hom_maps");
            int y = obj_of(*cat, e, "target", "action.hom_maps");
            int x = obj_of(*cat, e, "source", "action.hom_maps");
            long img_dim = cat->dim(a.obj(g, y), a.obj(g, x));
            std::vector<Vec> cols = parse_matrix(need_array(e, "matrix", "action.hom_maps"), f,
                                                 img_dim, "action.hom_maps.matrix");
            if ((long)cols.size() != cat->dim(y, x))
                bad("action.hom_maps: one column per basis morphism");
            a.hom_maps[(size_t)g][{y, x}] = std::move(cols);
        }
    }
    return a;
}

json action_body_json(const GroupAction& a) {
    json j;
    j["kind"] = "matrices";
    json perms = json::array();
    for (int g = 0; g < a.group.order(); ++g) {
        json row = json::array();
        for (int x = 0; x < (int)a.base->n_objects(); ++x)
            row.push_back(a.base->objects[(size_t)a.obj(g, x)]);
        perms.push_back(row);
    }
    j["obj_perms"] = perms;
    json maps = json::array();
    for (int g = 0; g < a.group.order(); ++g) {
        json entries = json::array();
        for (const auto& [key, cols] : a.hom_maps[(size_t)g]) {
            json e;
            e["target"] = a.base->objects[(size_t)key.first];
            e["source"] = a.base->objects[(size_t)key.second];
            e["matrix"] = matrix_json(cols);
            entries.push_back(e);
        }
        maps.push_back(entries);
    }
    j["hom_maps"] = maps;
    return j;
}

json header(const std::string& report, const FieldSpec& f) {
    json j;
    j["report"] = report;
    j["field"] = field_json(f);
    return j;
}

}  // namespace

std::string scalar_str(const Rat& a) { return a.get_str(); }

Rat parse_scalar(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) bad("scalar: expected an integer or a string like \"2/3\"");
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
        bad("scalar: cannot parse \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

json field_json(const FieldSpec& f) {
    json j;
    j["kind"] = f.kind == FieldKind::Rationals ? "Q" : "Fp";
    if (f.kind == FieldKind::PrimeField) j["p"] = f.characteristic;
    return j;
}

FieldSpec parse_field(const json& j) {
    std::string kind = need_str(j, "kind", "field");
    if (kind == "Q") {
        allow_keys(j, {"kind"}, "field");
        return FieldSpec::rationals();
    }
    if (kind != "Fp") bad("field: kind must be \"Q\" or \"Fp\"");
    allow_keys(j, {"kind", "p"}, "field");
    try {
        return FieldSpec::prime(need_int(j, "p", "field"));
    } catch (const hm_error& e) {
        bad(std::string("field: ") + e.what());
    }
}

KCategory parse_category(const json& file) {
    allow_keys(file, {"field", "table", "poset", "quiver"}, "category");
    FieldSpec field = parse_field(need(file, "field", "category"));
    int forms = file.contains("table") + file.contains("poset") + file.contains("quiver");
    if (forms != 1) bad("category: exactly one of \"table\", \"poset\", \"quiver\" required");

    if (file.contains("poset")) {
        const json& p = file.at("poset");
        allow_keys(p, {"elements", "covers"}, "poset");
        PosetSpec spec;
        spec.elements = str_list(need_array(p, "elements", "poset"), "poset.elements");
        for (const json& c : need_array(p, "covers", "poset")) {
            std::vector<std::string> pair = str_list(c, "poset.covers");
            if (pair.size() != 2) bad("poset.covers: entries are [low, high] pairs");
            spec.covers.emplace_back(pair[0], pair[1]);
        }
        return from_poset_incidence(spec, field);
    }

    if (file.contains("quiver")) {
        const json& q = file.at("quiver");
        allow_keys(q, {"vertices", "arrows", "relations", "max_path_length"}, "quiver");
        QuiverSpec spec;
        spec.vertices = str_list(need_array(q, "vertices", "quiver"), "quiver.vertices");
        for (const json& a : need_array(q, "arrows", "quiver")) {
            allow_keys(a, {"name", "source", "target"}, "quiver.arrows");
            spec.arrows.push_back({need_str(a, "name", "quiver.arrows"),
                                   need_str(a, "source", "quiver.arrows"),
                                   need_str(a, "target", "quiver.arrows")});
        }
        for (const json& r : need_array(q, "relations", "quiver"))
            spec.relations.push_back(str_list(r, "quiver.relations"));
        spec.max_path_length = (int)need_int(q, "max_path_length", "quiver");
        return from_quiver_monomial(spec, field);
    }

    const json& t = file.at("table");
    allow_keys(t, {"objects", "homs", "comp"}, "table");
    Field f(field);
    KCategory c;
    c.field = field;
    c.objects = str_list(need_array(t, "objects", "table"), "table.objects");
    for (const json& h : need_array(t, "homs", "table")) {
        allow_keys(h, {"target", "source", "basis", "identity"}, "table.homs");
        int y = obj_of(c, h, "target", "table.homs");
        int x = obj_of(c, h, "source", "table.homs");
        Hom hom;
        hom.names = str_list(need_array(h, "basis", "table.homs"), "table.homs.basis");
        if (h.contains("identity")) {
            std::string id = need_str(h, "identity", "table.homs");
            for (long i = 0; i < hom.dim(); ++i)
                if (hom.names[(size_t)i] == id) hom.id_index = (int)i;
            if (hom.id_index < 0) bad("table.homs: identity \"" + id + "\" not in basis");
        }
        if (c.homs.count({y, x})) bad("table.homs: duplicate hom entry");
        c.homs[{y, x}] = std::move(hom);
    }
    for (const json& e : need_array(t, "comp", "table")) {
        allow_keys(e, {"z", "y", "x", "f", "g", "value"}, "table.comp");
        int z = obj_of(c, e, "z", "table.comp");
        int y = obj_of(c, e, "y", "table.comp");
        int x = obj_of(c, e, "x", "table.comp");
        int fi = morph_of(c, z, y, need_str(e, "f", "table.comp"), "table.comp");
        int gi = morph_of(c, y, x, need_str(e, "g", "table.comp"), "table.comp");
        const json& val = need(e, "value", "table.comp");
        if (!val.is_object()) bad("table.comp: \"value\" must map basis names to scalars");
        Vec v((size_t)c.dim(z, x), Rat(0));
        for (auto it = val.begin(); it != val.end(); ++it)
            v[(size_t)morph_of(c, z, x, it.key(), "table.comp.value")] =
                f.normalize(parse_scalar(it.value()));
        c.set_comp(z, y, x, fi, gi, v);
    }
    return c;
}

json category_json(const KCategory& c) {
    json file;
    file["field"] = field_json(c.field);
    json t;
    t["objects"] = c.objects;
    json homs = json::array();
    for (const auto& [key, hom] : c.homs) {
        json h;
        h["target"] = c.objects[(size_t)key.first];
        h["source"] = c.objects[(size_t)key.second];
        h["basis"] = hom.names;
        if (hom.id_index >= 0) h["identity"] = hom.names[(size_t)hom.id_index];
        homs.push_back(h);
    }
    t["homs"] = homs;
    json comp = json::array();
    for (const auto& [key, vec] : c.comp) {
        auto [z, y, x, fi, gi] = key;
        json e;
        e["z"] = c.objects[(size_t)z];
        e["y"] = c.objects[(size_t)y];
        e["x"] = c.objects[(size_t)x];
        e["f"] = c.hom(z, y)->names[(size_t)fi];
        e["g"] = c.hom(y, x)->names[(size_t)gi];
        json val;
        const Hom* target = c.hom(z, x);
        for (size_t i = 0; i < vec.size(); ++i)
            if (vec[i] != 0) val[target->names[i]] = scalar_str(vec[i]);
        e["value"] = val;
        comp.push_back(e);
    }
    t["comp"] = comp;
    file["table"] = t;
    return file;
}

GroupAction parse_action_file(const json& file) {
    allow_keys(file, {"category", "group", "action"}, "action file");
    auto cat = std::make_shared<const KCategory>(
        parse_category(need(file, "category", "action file")));
    FiniteGroup group = parse_group(need(file, "group", "action file"));
    return parse_action_body(cat, std::move(group), need(file, "action", "action file"));
}

json action_file_json(const GroupAction& a) {
    json file;
    file["category"] = category_json(*a.base);
    file["group"] = group_json(a.group);
    file["action"] = action_body_json(a);
    return file;
}

GradedCategory parse_grading_file(const json& file) {
    allow_keys(file, {"category", "group", "grading"}, "grading file");
    auto cat = std::make_shared<const KCategory>(
        parse_category(need(file, "category", "grading file")));
    FiniteGroup group = parse_group(need(file, "group", "grading file"));
    const json& gj = need(file, "grading", "grading file");
    allow_keys(gj, {"components"}, "grading");
    Field f(cat->field);
    GradedCategory g;
    g.base = cat;
    g.group = std::move(group);
    for (const auto& [key, hom] : cat->homs)
        g.comps[key].resize((size_t)g.group.order());
    for (const json& e : need_array(gj, "components", "grading")) {
        allow_keys(e, {"target", "source", "degree", "basis"}, "grading.components");
        int y = obj_of(*cat, e, "target", "grading.components");
        int x = obj_of(*cat, e, "source", "grading.components");
        int s = g.group.elem_index(need_str(e, "degree", "grading.components"));
        std::vector<Vec> basis = parse_matrix(need_array(e, "basis", "grading.components"), f,
                                              cat->dim(y, x), "grading.components.basis");
        auto& slot = g.comps[{y, x}][(size_t)s];
        slot.insert(slot.end(), basis.begin(), basis.end());
    }
    return g;
}

json grading_file_json(const GradedCategory& g) {
    json file;
    file["category"] = category_json(*g.base);
    file["group"] = group_json(g.group);
    json comps = json::array();
    for (const auto& [key, per_degree] : g.comps)
        for (size_t s = 0; s < per_degree.size(); ++s) {
            if (per_degree[s].empty()) continue;
            json e;
            e["target"] = g.base->objects[(size_t)key.first];
            e["source"] = g.base->objects[(size_t)key.second];
            e["degree"] = g.group.names[s];
            e["basis"] = matrix_json(per_degree[s]);
            comps.push_back(e);
        }
    file["grading"] = json{{"components", comps}};
    return file;
}

EquivariantBimodule parse_equivariant_file(const json& file) {
    allow_keys(file, {"category", "group", "action", "module", "tau"}, "module file");
    auto cat = std::make_shared<const KCategory>(
        parse_category(need(file, "category", "module file")));
    FiniteGroup group = parse_group(need(file, "group", "module file"));
    GroupAction action =
        parse_action_body(cat, std::move(group), need(file, "action", "module file"));
    const json& mj = need(file, "module", "module file");
    if (mj.is_string()) {
        if (mj.get<std::string>() != "regular")
            bad("module: the only named module is \"regular\"");
        if (file.contains("tau")) bad("module file: \"tau\" is implied by the regular module");
        return regular_equivariant(action);
    }
    allow_keys(mj, {"spaces", "left", "right"}, "module");
    Field f(cat->field);
    EquivariantBimodule em;
    em.action = action;
    em.mod.base = cat;
    for (const json& e : need_array(mj, "spaces", "module")) {
        allow_keys(e, {"target", "source", "basis"}, "module.spaces");
        int y = obj_of(*cat, e, "target", "module.spaces");
        int x = obj_of(*cat, e, "source", "module.spaces");
        em.mod.spaces[{y, x}] =
            str_list(need_array(e, "basis", "module.spaces"), "module.spaces.basis");
    }
    for (const json& e : need_array(mj, "left", "module")) {
        allow_keys(e, {"y2", "y", "x", "maps"}, "module.left");
        int y2 = obj_of(*cat, e, "y2", "module.left");
        int y = obj_of(*cat, e, "y", "module.left");
        int x = obj_of(*cat, e, "x", "module.left");
        const json& maps = need_array(e, "maps", "module.left");
        std::vector<std::vector<Vec>> per_f;
        for (const json& m : maps)
            per_f.push_back(parse_matrix(m, f, em.mod.dim(y2, x), "module.left.maps"));
        if ((long)per_f.size() != cat->dim(y2, y)) bad("module.left: one map per morphism");
        em.mod.left[{y2, y, x}] = std::move(per_f);
    }
    for (const json& e : need_array(mj, "right", "module")) {
        allow_keys(e, {"y", "x1", "x2", "maps"}, "module.right");
        int y = obj_of(*cat, e, "y", "module.right");
        int x1 = obj_of(*cat, e, "x1", "module.right");
        int x2 = obj_of(*cat, e, "x2", "module.right");
        const json& maps = need_array(e, "maps", "module.right");
        std::vector<std::vector<Vec>> per_m;
        for (const json& m : maps)
            per_m.push_back(parse_matrix(m, f, em.mod.dim(y, x2), "module.right.maps"));
        if ((long)per_m.size() != em.mod.dim(y, x1)) bad("module.right: one map per module basis");
        em.mod.right[{y, x1, x2}] = std::move(per_m);
    }
    for (const json& e : need_array(file, "tau", "module file")) {
        allow_keys(e, {"g", "target", "source", "matrix"}, "tau");
        int g = em.action.group.elem_index(need_str(e, "g", "tau"));
        int y = obj_of(*cat, e, "target", "tau");
        int x = obj_of(*cat, e, "source", "tau");
        long img = em.mod.dim(em.action.obj(g, y), em.action.obj(g, x));
        std::vector<Vec> cols = parse_matrix(need_array(e, "matrix", "tau"), f, img, "tau.matrix");
        if ((long)cols.size() != em.mod.dim(y, x)) bad("tau: one column per module basis vector");
        em.tau[{g, y, x}] = std::move(cols);
    }
    return em;
}

json equivariant_file_json(const EquivariantBimodule& m) {
    const KCategory& c = *m.mod.base;
    json file;
    file["category"] = category_json(c);
    file["group"] = group_json(m.action.group);
    file["action"] = action_body_json(m.action);
    json mj;
    json spaces = json::array();
    for (const auto& [key, names] : m.mod.spaces) {
        json e;
        e["target"] = c.objects[(size_t)key.first];
        e["source"] = c.objects[(size_t)key.second];
        e["basis"] = names;
        spaces.push_back(e);
    }
    mj["spaces"] = spaces;
    json left = json::array();
    for (const auto& [key, per_f] : m.mod.left) {
        json e;
        e["y2"] = c.objects[(size_t)key[0]];
        e["y"] = c.objects[(size_t)key[1]];
        e["x"] = c.objects[(size_t)key[2]];
        json maps = json::array();
        for (const auto& cols : per_f) maps.push_back(matrix_json(cols));
        e["maps"] = maps;
        left.push_back(e);
    }
    mj["left"] = left;
    json right = json::array();
    for (const auto& [key, per_m] : m.mod.right) {
        json e;
        e["y"] = c.objects[(size_t)key[0]];
        e["x1"] = c.objects[(size_t)key[1]];
        e["x2"] = c.objects[(size_t)key[2]];
        json maps = json::array();
        for (const auto& cols : per_m) maps.push_back(matrix_json(cols));
        e["maps"] = maps;
        right.push_back(e);
    }
    mj["right"] = right;
    file["module"] = mj;
    json tau = json::array();
    for (const auto& [key, cols] : m.tau) {
        json e;
        e["g"] = m.action.group.names[(size_t)key[0]];
        e["target"] = c.objects[(size_t)key[1]];
        e["source"] = c.objects[(size_t)key[2]];
        e["matrix"] = matrix_json(cols);
        tau.push_back(e);
    }
    file["tau"] = tau;
    return file;
}

json validation_json(const std::string& subject, const ValidationReport& r) {
    json j;
    j["report"] = "validation";
    j["subject"] = subject;
    j["passed"] = r.passed();
    j["failures"] = r.failures;
    return j;
}

json dims_json(const std::string& kind, const std::vector<long>& dims, bool normalized,
               const FieldSpec& f) {
    json j = header(kind, f);
    j["complex"] = normalized ? "normalized" : "full";
    j["max_degree"] = (long)dims.size() - 1;
    json degrees = json::array();
    for (size_t n = 0; n < dims.size(); ++n) degrees.push_back((long)n);
    j["degrees"] = degrees;
    j["dims"] = dims;
    return j;
}

json strongly_graded_json(const StronglyGradedReport& full, const StronglyGradedReport& reduced,
                          const FieldSpec& f) {
    json j = header("strongly-graded", f);
    j["strongly_graded"] = reduced.strongly_graded;
    j["full_criterion"] = json{{"holds", full.strongly_graded}, {"witness", full.witness}};
    j["reduced_criterion"] = json{{"holds", reduced.strongly_graded}, {"witness", reduced.witness}};
    j["criteria_agree"] = full.strongly_graded == reduced.strongly_graded;
    return j;
}

json galois_json(const GaloisCertificate& cert, const PropertyReport* props, const FieldSpec& f) {
    json j = header("galois", f);
    j["galois"] = cert.galois;
    j["witness"] = cert.witness;
    j["object_pairs"] = (long)cert.tensors.size();
    j["unit_decompositions"] = (long)cert.rl.size();
    if (props) {
        json ps = json::array();
        for (const auto& [name, holds] : props->properties)
            ps.push_back(json{{"name", name}, {"holds", holds}});
        j["properties"] = ps;
        j["all_properties_hold"] = props->all_hold();
    }
    return j;
}

json check_json(const std::string& kind, const std::vector<std::string>& columns,
                const CheckReport& r, const FieldSpec& f) {
    json j = header(kind, f);
    j["max_degree"] = r.rows.empty() ? -1 : r.rows.back().degree;
    j["columns"] = columns;
    json rows = json::array();
    for (const CheckRow& row : r.rows) {
        json e;
        e["degree"] = row.degree;
        e["values"] = row.values;
        e["ok"] = row.ok;
        rows.push_back(e);
    }
    j["rows"] = rows;
    j["passed"] = r.passed();
    return j;
}

json e2_json(const E2Page& page, const FieldSpec& f) {
    json j = header("e2-page", f);
    j["pmax"] = page.pmax;
    j["qmax"] = page.qmax;
    j["dims"] = page.dims;
    return j;
}

json phi_json(const PhiReport& r, const std::string& element, const FieldSpec& f) {
    json j = header("coinduction", f);
    j["element"] = element;
    j["domain_dim"] = r.domain_dim;
    j["codomain_dim"] = r.codomain_dim;
    j["bijective"] = r.bijective;
    j["kg_linear"] = r.kg_linear;
    return j;
}

json ses_json(const SesReport& r, int window) {
    const Tower& t = r.tower;
    json j = header("tower", t.field);
    j["complex"] = "normalized";
    j["max_degree"] = t.nmax;
    j["stages"] = (long)t.dims.size();
    j["window"] = window;
    j["dims"] = t.dims;
    Field f(t.field);
    json ranks = json::array();
    for (const auto& stage : t.trans) {
        json per_degree = json::array();
        for (const auto& cols : stage) {
            long rows = cols.empty() ? 0 : (long)cols[0].size();
            SparseMatrix m(rows, (long)cols.size());
            for (long c = 0; c < (long)cols.size(); ++c)
                for (long rr = 0; rr < rows; ++rr) m.set(rr, c, cols[(size_t)c][(size_t)rr], f);
            per_degree.push_back(rank(m, f));
        }
        ranks.push_back(per_degree);
    }
    j["transition_ranks"] = ranks;
    json ml = json::array();
    for (int n = 0; n <= t.nmax; ++n) ml.push_back(ml_check(t, n).all_stabilized());
    j["ml_stabilized"] = ml;
    json rows = json::array();
    for (const SesRow& row : r.rows) {
        json e;
        e["degree"] = row.degree;
        e["lim1_prev"] = row.lim1_prev;
        e["lim"] = row.lim;
        e["inferred"] = row.inferred;
        e["certified"] = row.certified;
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j;
}

namespace {

bool is_scalar(const json& j) {
    return j.is_string() || j.is_number() || j.is_boolean() || j.is_null();
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
    if (j.is_null()) return "-";
    return j.dump();
}

bool scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const json& e : j)
        if (!is_scalar(e)) return false;
    return true;
}

std::string bracket_list(const json& a) {
    std::string out = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += scalar_text(a[i]);
    }
    return out + "]";
}

std::string cell_text(const json& j) {
    if (is_scalar(j)) return scalar_text(j);
    if (scalar_array(j)) return bracket_list(j);
    return j.dump();
}

void render_object_table(const json& arr, const std::string& indent, std::ostringstream& out) {
    std::vector<std::string> cols;
    for (const json& row : arr)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    std::vector<size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    cells.push_back(cols);
    for (const json& row : arr) {
        std::vector<std::string> r;
        for (const std::string& c : cols)
            r.push_back(row.contains(c) ? cell_text(row.at(c)) : "-");
        cells.push_back(std::move(r));
    }
    for (const auto& r : cells)
        for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : cells) {
        out << indent;
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) out << "  ";
            out << r[i] << std::string(width[i] - r[i].size(), ' ');
        }
        out << "\n";
    }
}

void render_value(const std::string& key, const json& v, const std::string& indent,
                  std::ostringstream& out) {
    if (is_scalar(v)) {
        out << indent << key << ": " << scalar_text(v) << "\n";
    } else if (scalar_array(v)) {
        out << indent << key << ": " << bracket_list(v) << "\n";
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        out << indent << key << ":\n";
        render_object_table(v, indent + "  ", out);
    } else if (v.is_array()) {
        out << indent << key << ":\n";
        for (const json& row : v) out << indent << "  " << cell_text(row) << "\n";
    } else {
        out << indent << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            render_value(it.key(), it.value(), indent + "  ", out);
    }
}

}  // namespace

std::string render_table(const json& report) {
    std::ostringstream out;
    if (!report.is_object()) {
        out << cell_text(report) << "\n";
        return out.str();
    }
    for (auto it = report.begin(); it != report.end(); ++it)
        render_value(it.key(), it.value(), "", out);
    return out.str();
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace hm::io
