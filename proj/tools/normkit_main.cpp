#include "normkit/error.hpp"
#include "normkit/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace normkit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::usage, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t effective_budget(std::size_t flag_value) {
    if (flag_value != 0) return flag_value;
    if (const char* env = std::getenv("NORMKIT_BUDGET")) {
        const unsigned long long parsed = std::strtoull(env, nullptr, 10);
        if (parsed > 0) return static_cast<std::size_t>(parsed);
    }
    return kDefaultBudget;
}

void emit(const ordered_json& json, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << json.dump(2) << "\n";
    else
        std::cout << human;
}

const ModelDecl& need_model(const TheoryDocument& doc, const std::string& name) {
    const ModelDecl* decl = doc.find_model(name);
    if (!decl) throw Error(errc::usage, "no model named '" + name + "' in the document");
    return *decl;
}

const PrenormDecl& need_prenorm(const TheoryDocument& doc, const std::string& name) {
    const PrenormDecl* decl = doc.find_prenorm(name);
    if (!decl) throw Error(errc::usage, "no prenorm named '" + name + "' in the document");
    return *decl;
}

int run(int argc, char** argv) {
    CLI::App app{"normkit: checks and brute-force enumeration for prenormed "
                 "algebraic structures over finite sets"};
    app.require_subcommand(1);

    bool json = false;
    std::size_t budget = 0;
    std::size_t seed = 0;
    app.add_flag("--json", json, "emit machine-readable JSON");
    app.add_option("--budget", budget, "assignment/enumeration budget (overrides NORMKIT_BUDGET)");
    app.add_option("--seed", seed, "seed for shuffled orderings (accepted for compatibility)");

    std::string file, model_name, prenorm_name, theory_name, constant_name;
    std::string from_name, to_name, norm1_name, norm2_name, via_name, mode_name = "prenorm";
    std::vector<std::string> model_names;
    bool emit_ast = false, emit_dot = false;

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse a document and print it canonically");
    parse_cmd->add_option("file", file)->required();
    parse_cmd->add_flag("--emit-ast", emit_ast, "dump the resolved AST as JSON");

    CLI::App* check_cmd = app.add_subcommand("check", "run a verification");
    check_cmd->require_subcommand(1);
    CLI::App* check_model = check_cmd->add_subcommand("model", "satisfaction of a model");
    check_model->add_option("file", file)->required();
    check_model->add_option("--model", model_name)->required();
    CLI::App* check_prenorm_cmd = check_cmd->add_subcommand("prenorm", "prenorm conditions");
    check_prenorm_cmd->add_option("file", file)->required();
    check_prenorm_cmd->add_option("--prenorm", prenorm_name)->required();
    CLI::App* check_short = check_cmd->add_subcommand("short", "short-morphism conditions");
    check_short->add_option("file", file)->required();
    check_short->add_option("--norm1", norm1_name, "norm of the first object")->required();
    check_short->add_option("--norm2", norm2_name, "norm of the second object")->required();
    check_short->add_option("--via", via_name, "candidate morphism between the sources")
        ->required();

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "all prenorms between two models");
    enumerate_cmd->add_option("file", file)->required();
    enumerate_cmd->add_option("--from", from_name)->required();
    enumerate_cmd->add_option("--to", to_name)->required();

    CLI::App* category_cmd = app.add_subcommand("category", "build or check a category");
    category_cmd->require_subcommand(1);
    CLI::App* cat_build = category_cmd->add_subcommand("build", "materialize Pnr/Snr");
    cat_build->add_option("file", file)->required();
    cat_build->add_option("--models", model_names)->required()->delimiter(',');
    cat_build->add_option("--mode", mode_name)->check(CLI::IsMember({"prenorm", "subnorm"}));
    cat_build->add_flag("--emit-dot", emit_dot, "emit a DOT graph");
    CLI::App* cat_laws = category_cmd->add_subcommand("laws", "build and verify category laws");
    cat_laws->add_option("file", file)->required();
    cat_laws->add_option("--models", model_names)->required()->delimiter(',');
    cat_laws->add_option("--mode", mode_name)->check(CLI::IsMember({"prenorm", "subnorm"}));

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a theory or a prenorm");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--theory", theory_name);
    classify_cmd->add_option("--prenorm", prenorm_name);
    classify_cmd->add_option("--constant", constant_name,
                             "target constant for definiteness classification");

    std::string example_name;
    CLI::App* example_cmd = app.add_subcommand("example", "run a worked example E1..E7");
    example_cmd->add_option("name", example_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::size_t map_budget = effective_budget(budget);

    if (*parse_cmd) {
        const TheoryDocument doc = parse_document(read_file(file));
        if (emit_ast)
            std::cout << to_json(doc).dump(2) << "\n";
        else
            std::cout << print_document(doc);
        return 0;
    }
    if (*check_model) {
        const TheoryDocument doc = parse_document(read_file(file));
        const ModelDecl& decl = need_model(doc, model_name);
        const SatisfactionReport report =
            models(decl.model.structure, decl.model.theory, map_budget);
        std::ostringstream human;
        human << "model " << decl.name << ": "
              << (report.satisfied ? "satisfies" : "does not satisfy") << " its theory\n";
        for (const AxiomVerdict& v : report.verdicts)
            human << "  axiom " << v.axiom << ": " << (v.holds ? "holds" : "fails") << "\n";
        emit(to_json(report), json, human.str());
        return report.satisfied ? 0 : 1;
    }
    if (*check_prenorm_cmd) {
        const TheoryDocument doc = parse_document(read_file(file));
        const PrenormDecl& decl = need_prenorm(doc, prenorm_name);
        const PrenormReport& report = decl.prenorm.report;
        std::ostringstream human;
        human << "prenorm " << decl.name << ": " << (report.passed ? "passes" : "fails") << "\n";
        for (const ConditionVerdict& v : report.condition_i)
            human << "  condition (i) at " << v.symbol << ": " << (v.holds ? "holds" : "fails")
                  << (v.holds ? "" : " (" + v.lhs_label + " not below " + v.rhs_label + ")")
                  << "\n";
        for (const ConditionVerdict& v : report.condition_ii)
            human << "  condition (ii) at " << v.symbol << ": " << (v.holds ? "holds" : "fails")
                  << "\n";
        emit(to_json(report), json, human.str());
        return report.passed ? 0 : 1;
    }
    if (*check_short) {
        const TheoryDocument doc = parse_document(read_file(file));
        const PrenormDecl& n1 = need_prenorm(doc, norm1_name);
        const PrenormDecl& n2 = need_prenorm(doc, norm2_name);
        const PrenormDecl& via = need_prenorm(doc, via_name);
        const NormedModel first = make_normed_model(n1.name, n1.prenorm.source, n1.prenorm);
        const NormedModel second = make_normed_model(n2.name, n2.prenorm.source, n2.prenorm);
        const ShortMorphismReport report =
            check_short_morphism(first, second, via.prenorm.alpha, via.prenorm.phi);
        std::ostringstream human;
        human << "short morphism " << via.name << ": "
              << (report.is_short() ? "short" : "not short")
              << (report.is_isometry ? " (isometry)" : "") << "\n";
        emit(to_json(report), json, human.str());
        return report.is_short() ? 0 : 1;
    }
    if (*enumerate_cmd) {
        const TheoryDocument doc = parse_document(read_file(file));
        const ModelDecl& source = need_model(doc, from_name);
        const ModelDecl& target = need_model(doc, to_name);
        const std::vector<Prenorm> found =
            enumerate_prenorms(source.model, target.model, std::nullopt, map_budget);
        ordered_json listing = ordered_json::array();
        std::ostringstream human;
        human << found.size() << " prenorm(s) " << from_name << " -> " << to_name << "\n";
        for (const Prenorm& p : found) {
            listing.push_back(to_json(p));
            human << "  phi:";
            for (std::size_t a = 0; a < p.phi.size(); ++a)
                human << " " << source.model.structure.carrier.elements[a] << "->"
                      << target.model.structure.carrier.elements[p.phi[a]];
            human << (p.report.is_subnorm ? "  [subnorm]" : "") << "\n";
        }
        emit({{"count", found.size()}, {"prenorms", std::move(listing)}}, json, human.str());
        return 0;
    }
    if (*cat_build || *cat_laws) {
        const TheoryDocument doc = parse_document(read_file(file));
        std::vector<std::pair<std::string, Model>> named;
        for (const std::string& name : model_names)
            named.emplace_back(name, need_model(doc, name).model);
        const NormMode mode = mode_name == "subnorm" ? NormMode::subnorm : NormMode::prenorm;
        const PnrCategory category = build_pnr(named, mode, map_budget);
        if (*cat_build) {
            if (emit_dot) {
                std::cout << to_dot(category.presentation);
                return 0;
            }
            std::ostringstream human;
            human << category.presentation.objects.size() << " object(s), "
                  << category.presentation.morphisms.size() << " morphism(s)\n";
            emit(to_json(category.presentation), json, human.str());
            return 0;
        }
        const LawReport laws = check_category_laws(category.presentation);
        std::ostringstream human;
        human << "category laws: " << (laws.all_pass() ? "all pass" : "violated") << "\n";
        emit(to_json(laws), json, human.str());
        return laws.all_pass() ? 0 : 1;
    }
    if (*classify_cmd) {
        const TheoryDocument doc = parse_document(read_file(file));
        if (!theory_name.empty()) {
            const TheoryDecl* decl = doc.find_theory(theory_name);
            if (!decl) throw Error(errc::usage, "no theory named '" + theory_name + "'");
            const TheoryClass cls = classify_theory(decl->theory);
            ordered_json out{{"prealgebraic", cls.prealgebraic},
                             {"subalgebraic", cls.subalgebraic},
                             {"algebraic", cls.algebraic}};
            std::ostringstream human;
            human << "theory " << theory_name << ": prealgebraic=" << cls.prealgebraic
                  << " subalgebraic=" << cls.subalgebraic << " algebraic=" << cls.algebraic
                  << "\n";
            emit(out, json, human.str());
            return 0;
        }
        if (!prenorm_name.empty() && !constant_name.empty()) {
            const PrenormDecl& decl = need_prenorm(doc, prenorm_name);
            const DefinitenessClass cls = classify_definiteness(decl.prenorm, constant_name);
            std::ostringstream human;
            human << "prenorm " << prenorm_name << " wrt " << constant_name << ": "
                  << to_json(cls).dump() << "\n";
            emit(to_json(cls), json, human.str());
            return 0;
        }
        throw Error(errc::usage, "classify requires --theory or --prenorm with --constant");
    }
    if (*example_cmd) {
        const ExampleReport report = run_worked_example(example_name);
        std::ostringstream human;
        human << report.name << ": " << report.summary << "\n"
              << "  enumerated subnorms: " << report.enumerated << "\n";
        for (const ExampleAssertion& a : report.assertions)
            human << "  " << (a.passed ? "PASS" : "FAIL") << " " << a.label
                  << (a.detail.empty() ? "" : " (" + a.detail + ")") << "\n";
        emit(to_json(report), json, human.str());
        return report.passed() ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const normkit::Error& e) {
        std::cerr << "error [" << normkit::errc_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
