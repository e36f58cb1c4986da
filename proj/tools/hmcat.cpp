// Command-line front end: parse spec files, run the requested computation,
// and print a deterministic JSON or aligned-text report.
//
// Exit codes: 0 success, 1 check failure (witness in the report), 2 input or
// usage error, 3 size budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hm/io.hpp"

using hm::io::json;

namespace {

struct CheckFailure {};  // report already printed; exit 1

std::string g_format = "table";

void emit(const json& report) {
    if (g_format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << hm::io::render_table(report);
}

hm::FieldSpec field_from_flag(const std::string& s) {
    if (s == "Q") return hm::FieldSpec::rationals();
    if (s.size() > 1 && s[0] == 'F') return hm::FieldSpec::prime(std::stol(s.substr(1)));
    throw hm::hm_error("bad-params", "--field expects Q or F<p>, got " + s);
}

// A spec file is classified by its top-level keys: equivariant module files
// carry "module", grading files "grading", action files "action", and plain
// category files neither.
enum class FileKind { Category, Action, Grading, Module };

FileKind classify(const json& file) {
    if (!file.is_object()) throw hm::hm_error("parse-error", "spec file must be a JSON object");
    if (file.contains("module")) return FileKind::Module;
    if (file.contains("grading")) return FileKind::Grading;
    if (file.contains("action")) return FileKind::Action;
    return FileKind::Category;
}

hm::GradedCategory grading_of(const json& file) {
    if (classify(file) == FileKind::Grading) return hm::io::parse_grading_file(file);
    hm::GroupAction a = hm::io::parse_action_file(file);
    return hm::smash_product(a).grading;
}

hm::EquivariantBimodule module_of(const json& file) {
    if (classify(file) == FileKind::Module) return hm::io::parse_equivariant_file(file);
    return hm::regular_equivariant(hm::io::parse_action_file(file));
}

hm::CorpusParams corpus_params(long a, long b, long c, long d, unsigned seed) {
    hm::CorpusParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.seed = seed;
    return p;
}

void run_validate(const std::string& path) {
    json file = hm::io::load_file(path);
    hm::ValidationReport r;
    std::string subject;
    switch (classify(file)) {
        case FileKind::Category: {
            subject = "category";
            r = hm::validate_category(hm::io::parse_category(file));
            break;
        }
        case FileKind::Action: {
            subject = "action";
            r = hm::validate_action(hm::io::parse_action_file(file));
            break;
        }
        case FileKind::Grading: {
            subject = "grading";
            r = hm::validate_grading(hm::io::parse_grading_file(file));
            break;
        }
        case FileKind::Module: {
            subject = "equivariant-module";
            r = hm::validate_equivariant(hm::io::parse_equivariant_file(file));
            break;
        }
    }
    emit(hm::io::validation_json(subject, r));
    if (!r.passed()) throw CheckFailure{};
}

void run_dims(const std::string& path, bool cohomology, int nmax, bool full, long budget) {
    auto cat = std::make_shared<const hm::KCategory>(
        hm::io::parse_category(hm::io::load_file(path)));
    hm::Bimodule reg = hm::regular_bimodule(cat);
    std::vector<long> dims = cohomology
                                 ? hm::cohomology_dims(cat, reg, nmax, !full, budget)
                                 : hm::homology_dims(cat, reg, nmax, !full, budget);
    emit(hm::io::dims_json(cohomology ? "cohomology" : "homology", dims, !full, cat->field));
}

void run_center(const std::string& path) {
    auto cat = std::make_shared<const hm::KCategory>(
        hm::io::parse_category(hm::io::load_file(path)));
    hm::Bimodule reg = hm::regular_bimodule(cat);
    hm::CenterResult c = hm::center(cat, reg);
    json j;
    j["report"] = "center";
    j["field"] = hm::io::field_json(cat->field);
    j["dim"] = c.dim;
    emit(j);
}

void run_oracle(const std::string& path, int nmax) {
    json file = hm::io::load_file(path);
    if (!file.is_object() || !file.contains("poset"))
        throw hm::hm_error("parse-error", "oracle requires a poset category spec");
    hm::FieldSpec field = hm::io::parse_field(file.at("field"));
    hm::io::parse_category(file);  // full schema check
    hm::PosetSpec p;
    for (const json& e : file.at("poset").at("elements")) p.elements.push_back(e);
    for (const json& c : file.at("poset").at("covers")) p.covers.emplace_back(c.at(0), c.at(1));
    std::vector<long> dims = hm::order_complex_cohomology(p, field, nmax);
    json j;
    j["report"] = "oracle";
    j["field"] = hm::io::field_json(field);
    j["complex"] = "order-complex";
    j["max_degree"] = nmax;
    json degrees = json::array();
    for (size_t n = 0; n < dims.size(); ++n) degrees.push_back((long)n);
    j["degrees"] = degrees;
    j["dims"] = dims;
    emit(j);
}

void run_smash(const std::string& path) {
    hm::GroupAction a = hm::io::parse_action_file(hm::io::load_file(path));
    hm::SmashResult sp = hm::smash_product(a);
    json j;
    j["report"] = "smash";
    j["field"] = hm::io::field_json(sp.cat->field);
    j["objects"] = sp.cat->objects;
    j["total_hom_dim"] = sp.cat->total_hom_dim();
    j["grading_valid"] = hm::validate_grading(sp.grading).passed();
    j["category"] = hm::io::category_json(*sp.cat);
    emit(j);
}

void run_galois(const std::string& path) {
    hm::GradedCategory g = grading_of(hm::io::load_file(path));
    hm::ValidationReport v = hm::validate_grading(g);
    if (!v.passed()) {
        emit(hm::io::validation_json("grading", v));
        throw CheckFailure{};
    }
    hm::StronglyGradedReport full = hm::strongly_graded_full(g);
    hm::StronglyGradedReport reduced = hm::strongly_graded_check(g);
    if (!reduced.strongly_graded || !full.strongly_graded) {
        emit(hm::io::strongly_graded_json(full, reduced, g.base->field));
        throw CheckFailure{};
    }
    hm::GaloisCertificate cert = hm::galois_check(g);
    hm::PropertyReport props = hm::properties_check(g, cert);
    emit(hm::io::galois_json(cert, &props, g.base->field));
    if (!cert.galois || !props.all_hold()) throw CheckFailure{};
}

void run_decompose(const std::string& path, int nmax, long budget) {
    hm::EquivariantBimodule m = module_of(hm::io::load_file(path));
    hm::CheckReport r = hm::decomposition_check(m, nmax, budget);
    emit(hm::io::check_json("decomposition", {"smash", "class_sum", "component_sum"}, r,
                            m.mod.base->field));
    if (!r.passed()) throw CheckFailure{};
}

void run_e2(const std::string& path, int nmax, long budget) {
    hm::EquivariantBimodule m = module_of(hm::io::load_file(path));
    emit(hm::io::e2_json(hm::e2_page(m, nmax, nmax, budget), m.mod.base->field));
}

void run_collapse(const std::string& path, int nmax, long budget) {
    hm::EquivariantBimodule m = module_of(hm::io::load_file(path));
    hm::CheckReport r = hm::collapse_check(m, nmax, budget);
    emit(hm::io::check_json("collapse", {"smash", "invariants"}, r, m.mod.base->field));
    if (!r.passed()) throw CheckFailure{};
}

void run_tower(const std::string& family, long a, long b, long c, long d, unsigned seed,
               const std::string& field, int nmax, int stages, int window, long budget) {
    hm::FilteredFamily fam = hm::family_from_corpus(hm::family_from_name(family),
                                                    corpus_params(a, b, c, d, seed),
                                                    field_from_flag(field));
    hm::SesReport r = hm::ses_report(fam, nmax, stages, budget, window);
    emit(hm::io::ses_json(r, window));
}

void run_gen(const std::string& family, long a, long b, long c, long d, unsigned seed,
             const std::string& field, const std::string& out_path) {
    hm::CorpusResult res = hm::corpus_generate(hm::family_from_name(family),
                                               corpus_params(a, b, c, d, seed),
                                               field_from_flag(field));
    json spec;
    if (res.poset_derived) {
        // poset form keeps the spec small and feeds the oracle verb directly
        spec["field"] = hm::io::field_json(res.cat.field);
        json covers = json::array();
        for (const auto& [lo, hi] : res.poset.covers) covers.push_back(json::array({lo, hi}));
        spec["poset"] = json{{"elements", res.poset.elements}, {"covers", covers}};
    } else {
        spec = hm::io::category_json(res.cat);
    }
    if (out_path.empty()) {
        std::cout << spec.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw hm::hm_error("parse-error", "cannot write " + out_path);
        out << spec.dump(2) << "\n";
        json j;
        j["report"] = "gen";
        j["family"] = family;
        j["written"] = out_path;
        emit(j);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite k-linear category (co)homology toolkit"};
    app.require_subcommand(1);

    std::string path, family = "chain", field = "Q", out_path;
    int nmax = 3, stages = 4, window = 3;
    long budget = hm::kDefaultBudget;
    long pa = 3, pb = 0, pc = 0, pd = 0;
    unsigned seed = 1;
    bool full = false;

    auto add_common = [&](CLI::App* cmd, bool with_degree = true) {
        cmd->add_option("--format", g_format, "Report format")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--budget", budget, "Max complex dimension per degree");
        if (with_degree) cmd->add_option("--max-degree", nmax, "Truncation degree");
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", path, "Spec file (JSON)")->required();
    };
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "Corpus family name")->required();
        cmd->add_option("--a", pa, "First family parameter");
        cmd->add_option("--b", pb, "Second family parameter");
        cmd->add_option("--c", pc, "Third family parameter");
        cmd->add_option("--d", pd, "Fourth family parameter");
        cmd->add_option("--seed", seed, "Random seed (random families)");
        cmd->add_option("--field", field, "Coefficient field: Q or F<p>");
    };

    CLI::App* validate = app.add_subcommand("validate", "Check a spec file's invariants");
    add_input(validate);
    add_common(validate, false);

    CLI::App* cohomology = app.add_subcommand("cohomology", "Hochschild-Mitchell cohomology dims");
    add_input(cohomology);
    add_common(cohomology);
    cohomology->add_flag("--full", full, "Use the full (non-normalized) complex");

    CLI::App* homology = app.add_subcommand("homology", "Hochschild-Mitchell homology dims");
    add_input(homology);
    add_common(homology);
    homology->add_flag("--full", full, "Use the full (non-normalized) complex");

    CLI::App* center = app.add_subcommand("center", "Dimension of the categorical center");
    add_input(center);
    add_common(center, false);

    CLI::App* oracle = app.add_subcommand("oracle", "Order-complex cohomology of a poset spec");
    add_input(oracle);
    add_common(oracle);

    CLI::App* smash = app.add_subcommand("smash", "Build the smash product of an action spec");
    add_input(smash);
    add_common(smash, false);

    CLI::App* galois = app.add_subcommand("galois", "Strongly-graded and Galois verification");
    add_input(galois);
    add_common(galois, false);

    CLI::App* decompose = app.add_subcommand("decompose", "Conjugacy-class decomposition check");
    add_input(decompose);
    add_common(decompose);

    CLI::App* e2 = app.add_subcommand("e2", "E2-page dimensions H^p(G, H^q)");
    add_input(e2);
    add_common(e2);

    CLI::App* collapse = app.add_subcommand("collapse", "Invariants collapse check (char 0)");
    add_input(collapse);
    add_common(collapse);

    CLI::App* tower = app.add_subcommand("tower", "Stabilizing tower over a corpus filtration");
    add_family(tower);
    add_common(tower);
    tower->add_option("--stages", stages, "Number of filtration stages");
    tower->add_option("--window", window, "Trailing stages required for certificates");

    CLI::App* gen = app.add_subcommand("gen", "Write a corpus category spec file");
    add_family(gen);
    add_common(gen, false);
    gen->add_option("--out", out_path, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) run_validate(path);
        if (*cohomology) run_dims(path, true, nmax, full, budget);
        if (*homology) run_dims(path, false, nmax, full, budget);
        if (*center) run_center(path);
        if (*oracle) run_oracle(path, nmax);
        if (*smash) run_smash(path);
        if (*galois) run_galois(path);
        if (*decompose) run_decompose(path, nmax, budget);
        if (*e2) run_e2(path, nmax, budget);
        if (*collapse) run_collapse(path, nmax, budget);
        if (*tower) run_tower(family, pa, pb, pc, pd, seed, field, nmax, stages, window, budget);
        if (*gen) run_gen(family, pa, pb, pc, pd, seed, field, out_path);
    } catch (const CheckFailure&) {
        return 1;
    } catch (const hm::hm_error& e) {
        json err;
        err["report"] = "error";
        err["code"] = e.code;
        err["message"] = e.what();
        emit(err);
        return e.code == "dimension-overflow" ? 3 : 2;
    }
    return 0;
}
