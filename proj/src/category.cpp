#include "normkit/category.hpp"

#include "normkit/error.hpp"

#include <algorithm>
#include <sstream>

namespace normkit {

LawReport check_category_laws(const CategoryPresentation& category) {
    LawReport report;
    const auto& ms = category.morphisms;

    report.src_trg_coherent = true;
    for (const auto& [pair, h] : category.comp) {
        const auto [f, g] = pair;
        if (f >= ms.size() || g >= ms.size() || h >= ms.size() || ms[f].trg != ms[g].src) {
            report.src_trg_coherent = false;
            report.failures.push_back({"comp defined on a non-composable pair", {f, g}});
            continue;
        }
        if (ms[h].src != ms[f].src || ms[h].trg != ms[g].trg) {
            report.src_trg_coherent = false;
            report.failures.push_back({"composite has wrong endpoints", {f, g, h}});
        }
    }
    for (std::size_t f = 0; f < ms.size(); ++f)
        for (std::size_t g = 0; g < ms.size(); ++g)
            if (ms[f].trg == ms[g].src && !category.comp.count({f, g})) {
                report.src_trg_coherent = false;
                report.failures.push_back({"comp undefined on a composable pair", {f, g}});
            }

    report.identity_endpoints = category.identities.size() == category.objects.size();
    if (!report.identity_endpoints)
        report.failures.push_back({"identity assignment does not cover the objects", {}});
    for (std::size_t a = 0; a < category.identities.size(); ++a) {
        const std::size_t id = category.identities[a];
        if (id >= ms.size() || ms[id].src != a || ms[id].trg != a) {
            report.identity_endpoints = false;
            report.failures.push_back({"identity of object " + category.objects[a] +
                                           " has wrong endpoints",
                                       {id}});
        }
    }

    report.associative = true;
    for (const auto& [fg_pair, fg] : category.comp) {
        const auto [f, g] = fg_pair;
        for (std::size_t h = 0; h < ms.size(); ++h) {
            auto gh_it = category.comp.find({g, h});
            if (gh_it == category.comp.end()) continue;
            auto lhs = category.comp.find({fg, h});
            auto rhs = category.comp.find({f, gh_it->second});
            if (lhs == category.comp.end() || rhs == category.comp.end() ||
                lhs->second != rhs->second) {
                report.associative = false;
                report.failures.push_back({"associativity fails", {f, g, h}});
            }
        }
    }

    report.identity_neutral = true;
    for (std::size_t f = 0; f < ms.size(); ++f) {
        if (category.identities.size() != category.objects.size()) break;
        const std::size_t id_src = category.identities[ms[f].src];
        const std::size_t id_trg = category.identities[ms[f].trg];
        auto left = category.comp.find({id_src, f});
        auto right = category.comp.find({f, id_trg});
        if (left == category.comp.end() || left->second != f || right == category.comp.end() ||
            right->second != f) {
            report.identity_neutral = false;
            report.failures.push_back({"identity is not neutral", {f}});
        }
    }
    return report;
}

std::string to_dot(const CategoryPresentation& category) {
    std::ostringstream out;
    out << "digraph category {\n";
    for (std::size_t a = 0; a < category.objects.size(); ++a)
        out << "  o" << a << " [label=\"" << category.objects[a] << "\"];\n";
    for (const auto& m : category.morphisms)
        out << "  o" << m.src << " -> o" << m.trg << " [label=\"" << m.label << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

/// Fills comp and identities for a hom-set-complete arrow list.
void close_presentation(PnrCategory& category) {
    auto& pres = category.presentation;
    const auto& ms = pres.morphisms;

    pres.identities.assign(pres.objects.size(), SIZE_MAX);
    for (std::size_t f = 0; f < ms.size(); ++f) {
        if (ms[f].src != ms[f].trg) continue;
        const Prenorm& arrow = category.arrows[f];
        if (arrow.alpha.is_identity_on_names()) {
            bool id_phi = true;
            for (std::size_t i = 0; i < arrow.phi.size(); ++i)
                if (arrow.phi[i] != i) {
                    id_phi = false;
                    break;
                }
            if (id_phi) pres.identities[ms[f].src] = f;
        }
    }
    for (std::size_t a = 0; a < pres.objects.size(); ++a)
        if (pres.identities[a] == SIZE_MAX)
            throw Error(errc::internal_invariant_violation,
                        "identity morphism missing from enumerated hom-set of '" +
                            pres.objects[a] + "'");

    for (std::size_t f = 0; f < ms.size(); ++f)
        for (std::size_t g = 0; g < ms.size(); ++g) {
            if (ms[f].trg != ms[g].src) continue;
            Prenorm composite = compose_prenorms(category.arrows[f], category.arrows[g]);
            std::size_t found = SIZE_MAX;
            for (std::size_t h = 0; h < ms.size(); ++h)
                if (ms[h].src == ms[f].src && ms[h].trg == ms[g].trg &&
                    category.arrows[h].same_arrow(composite)) {
                    found = h;
                    break;
                }
            if (found == SIZE_MAX)
                throw Error(errc::internal_invariant_violation,
                            "composite morphism missing from enumerated hom-set");
            pres.comp[{f, g}] = found;
        }
}

} // namespace

PnrCategory build_pnr(const std::vector<std::pair<std::string, Model>>& named_models,
                      NormMode mode, std::size_t map_budget, std::size_t morphism_budget) {
    for (const auto& [name, model] : named_models) {
        const TheoryClass cls = classify_theory(model.theory);
        if (mode == NormMode::subnorm ? !cls.subalgebraic : !cls.prealgebraic)
            throw Error(errc::not_prealgebraic,
                        "theory of model '" + name + "' is not " +
                            (mode == NormMode::subnorm ? "subalgebraic" : "prealgebraic"));
    }

    PnrCategory category;
    for (const auto& [name, model] : named_models) category.presentation.objects.push_back(name);

    for (std::size_t i = 0; i < named_models.size(); ++i)
        for (std::size_t j = 0; j < named_models.size(); ++j) {
            std::vector<Prenorm> homs = enumerate_prenorms(named_models[i].second,
                                                           named_models[j].second, std::nullopt,
                                                           map_budget);
            for (Prenorm& p : homs) {
                if (category.arrows.size() >= morphism_budget)
                    throw Error(errc::budget_exceeded, "morphism budget exceeded");
                category.presentation.morphisms.push_back(
                    {named_models[i].first + "->" + named_models[j].first + "#" +
                         std::to_string(category.arrows.size()),
                     i, j});
                category.arrows.push_back(std::move(p));
            }
        }
    close_presentation(category);
    return category;
}

NormedModel make_normed_model(std::string name, Model model, Prenorm norm) {
    if (!(norm.source == model))
        throw Error(errc::target_mismatch, "norm's source differs from the model");
    if (!norm.report.passed)
        throw Error(errc::model_invalid, "norm of '" + name + "' does not verify as a prenorm");
    return NormedModel{std::move(name), std::move(model), std::move(norm)};
}

ShortMorphismReport check_short_morphism(const NormedModel& first, const NormedModel& second,
                                         const SignatureHom& beta, const CarrierMap& psi) {
    if (!(first.norm.target == second.norm.target))
        throw Error(errc::target_mismatch, "normed models have different targets");
    const Model& target = first.norm.target;
    const PivotResult pivot = find_pivot(target.structure);
    if (!pivot.pivotal || pivot.empty_pivotal)
        throw Error(errc::not_pivotal, "shared target model is not pivotal");
    const RelTable& leq = target.structure.rel_tables.at(*pivot.pivot);

    ShortMorphismReport report;
    report.is_prenorm = check_prenorm(first.model, second.model, beta, psi).passed;

    // alpha_2 after beta must equal alpha_1 symbol-by-symbol.
    report.signature_triangle_commutes = true;
    for (const auto& [symbol, image] : beta.map)
        if (second.norm.alpha.apply(image) != first.norm.alpha.apply(symbol)) {
            report.signature_triangle_commutes = false;
            break;
        }

    report.contraction_holds = true;
    report.is_isometry = true;
    for (std::size_t a = 0; a < psi.size(); ++a) {
        const std::size_t through = second.norm.phi[psi[a]]; // ||psi(a)||_2
        const std::size_t direct = first.norm.phi[a];        // ||a||_1
        if (!leq.count({through, direct})) {
            if (report.contraction_holds)
                report.contraction_witness = first.model.structure.carrier.elements[a];
            report.contraction_holds = false;
        }
        if (through != direct) report.is_isometry = false;
    }
    return report;
}

PnrCategory build_pnr_over_target(const std::vector<NormedModel>& objects, const Model& target,
                                  std::size_t map_budget, std::size_t morphism_budget) {
    const PivotResult pivot = find_pivot(target.structure);
    if (!pivot.pivotal || pivot.empty_pivotal)
        throw Error(errc::not_pivotal, "target model is not pivotal");
    for (const NormedModel& object : objects)
        if (!(object.norm.target == target))
            throw Error(errc::target_mismatch,
                        "normed model '" + object.name + "' is not over the given target");

    PnrCategory category;
    for (const NormedModel& object : objects) category.presentation.objects.push_back(object.name);

    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j) {
            std::vector<Prenorm> homs = enumerate_prenorms(objects[i].model, objects[j].model,
                                                           std::nullopt, map_budget);
            for (Prenorm& p : homs) {
                if (!check_short_morphism(objects[i], objects[j], p.alpha, p.phi).is_short())
                    continue;
                if (category.arrows.size() >= morphism_budget)
                    throw Error(errc::budget_exceeded, "morphism budget exceeded");
                category.presentation.morphisms.push_back(
                    {objects[i].name + "->" + objects[j].name + "#" +
                         std::to_string(category.arrows.size()),
                     i, j});
                category.arrows.push_back(std::move(p));
            }
        }
    close_presentation(category);
    return category;
}

PnrCategory forgetful_restrict_category(const PnrCategory& category, const Theory& sub) {
    PnrCategory out;
    out.presentation = category.presentation;
    out.arrows.reserve(category.arrows.size());
    for (const Prenorm& arrow : category.arrows)
        out.arrows.push_back(restrict_prenorm(arrow, sub, sub));
    return out;
}

} // namespace normkit
