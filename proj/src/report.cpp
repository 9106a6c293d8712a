#include "normkit/report.hpp"

namespace normkit {

namespace {

ordered_json symbols_json(const std::vector<Symbol>& symbols) {
    ordered_json out = ordered_json::array();
    for (const Symbol& s : symbols) out.push_back({{"name", s.name}, {"arity", s.arity}});
    return out;
}

ordered_json term_json(const Term& term) {
    if (term.kind == Term::Kind::variable) return {{"var", term.name}};
    ordered_json args = ordered_json::array();
    for (const Term& a : term.args) args.push_back(term_json(a));
    return {{"fn", term.name}, {"args", std::move(args)}};
}

ordered_json matrix_json(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::equal:
        return {{"equal", {term_json(f.terms[0]), term_json(f.terms[1])}}};
    case Formula::Kind::rel_atom: {
        ordered_json args = ordered_json::array();
        for (const Term& t : f.terms) args.push_back(term_json(t));
        return {{"rel", f.rel}, {"args", std::move(args)}};
    }
    case Formula::Kind::neg:
        return {{"not", matrix_json(f.sub[0])}};
    case Formula::Kind::conj:
        return {{"and", {matrix_json(f.sub[0]), matrix_json(f.sub[1])}}};
    case Formula::Kind::disj:
        return {{"or", {matrix_json(f.sub[0]), matrix_json(f.sub[1])}}};
    case Formula::Kind::implies:
    default:
        return {{"implies", {matrix_json(f.sub[0]), matrix_json(f.sub[1])}}};
    }
}

ordered_json formula_json(const ClosedFormula& formula) {
    return {{"forall", formula.vars}, {"matrix", matrix_json(formula.matrix)}};
}

ordered_json verdict_json(const ConditionVerdict& v) {
    ordered_json out{{"symbol", v.symbol}, {"holds", v.holds}};
    if (!v.holds) {
        out["counterexample"] = v.counterexample;
        out["lhs"] = v.lhs_label;
        out["rhs"] = v.rhs_label;
    }
    return out;
}

} // namespace

ordered_json to_json(const Signature& sig) {
    ordered_json pairing = ordered_json::array();
    for (const Symbol& fn : sig.functions) {
        auto it = sig.pairing.find(fn.name);
        if (it != sig.pairing.end()) pairing.push_back({{"fn", it->first}, {"rel", it->second}});
    }
    return {{"functions", symbols_json(sig.functions)},
            {"relations", symbols_json(sig.relations)},
            {"pairing", std::move(pairing)}};
}

ordered_json to_json(const Theory& theory) {
    ordered_json axioms = ordered_json::array();
    for (const NamedAxiom& a : theory.axioms)
        axioms.push_back({{"name", a.name}, {"formula", formula_json(a.formula)}});
    return {{"variables", theory.variables},
            {"signature", to_json(theory.signature)},
            {"axioms", std::move(axioms)}};
}

ordered_json to_json(const FiniteStructure& structure) {
    ordered_json fns = ordered_json::object();
    for (const Symbol& fn : structure.signature.functions) {
        ordered_json table = ordered_json::array();
        for (const std::size_t v : structure.fn_tables.at(fn.name))
            table.push_back(structure.carrier.elements[v]);
        fns[fn.name] = std::move(table);
    }
    ordered_json rels = ordered_json::object();
    for (const Symbol& rel : structure.signature.relations) {
        ordered_json table = ordered_json::array();
        for (const Tuple& t : structure.rel_tables.at(rel.name)) {
            ordered_json tuple = ordered_json::array();
            for (const std::size_t v : t) tuple.push_back(structure.carrier.elements[v]);
            table.push_back(std::move(tuple));
        }
        rels[rel.name] = std::move(table);
    }
    return {{"carrier", structure.carrier.elements},
            {"functions", std::move(fns)},
            {"relations", std::move(rels)}};
}

ordered_json to_json(const SatisfactionReport& report) {
    ordered_json verdicts = ordered_json::array();
    for (const AxiomVerdict& v : report.verdicts) {
        ordered_json entry{{"axiom", v.axiom}, {"holds", v.holds}};
        if (!v.holds) {
            ordered_json witness = ordered_json::object();
            for (const auto& [var, label] : v.witness) witness[var] = label;
            entry["witness"] = std::move(witness);
        }
        verdicts.push_back(std::move(entry));
    }
    return {{"satisfied", report.satisfied}, {"verdicts", std::move(verdicts)}};
}

ordered_json to_json(const PrenormReport& report) {
    ordered_json ci = ordered_json::array(), cii = ordered_json::array();
    for (const ConditionVerdict& v : report.condition_i) ci.push_back(verdict_json(v));
    for (const ConditionVerdict& v : report.condition_ii) cii.push_back(verdict_json(v));
    return {{"condition_i", std::move(ci)},
            {"condition_ii", std::move(cii)},
            {"passed", report.passed},
            {"is_subnorm", report.is_subnorm},
            {"is_homomorphism", report.is_homomorphism}};
}

ordered_json to_json(const Prenorm& prenorm) {
    ordered_json alpha = ordered_json::object();
    for (const auto& [from, to] : prenorm.alpha.map) alpha[from] = to;
    ordered_json phi = ordered_json::object();
    for (std::size_t a = 0; a < prenorm.phi.size(); ++a)
        phi[prenorm.source.structure.carrier.elements[a]] =
            prenorm.target.structure.carrier.elements[prenorm.phi[a]];
    return {{"alpha", std::move(alpha)}, {"phi", std::move(phi)}, {"report", to_json(prenorm.report)}};
}

ordered_json to_json(const DefinitenessClass& cls) {
    return {{"upward_semidefinite", cls.upward_semidefinite},
            {"downward_semidefinite", cls.downward_semidefinite},
            {"upward_definite", cls.upward_definite},
            {"downward_definite", cls.downward_definite},
            {"indefinite", cls.indefinite},
            {"trivial", cls.trivial},
            {"exclusion_set_empty", cls.exclusion_set_empty}};
}

ordered_json to_json(const LawReport& report) {
    ordered_json failures = ordered_json::array();
    for (const LawWitness& w : report.failures)
        failures.push_back({{"description", w.description}, {"morphisms", w.morphisms}});
    return {{"src_trg_coherent", report.src_trg_coherent},
            {"identity_endpoints", report.identity_endpoints},
            {"associative", report.associative},
            {"identity_neutral", report.identity_neutral},
            {"all_pass", report.all_pass()},
            {"failures", std::move(failures)}};
}

ordered_json to_json(const CategoryPresentation& category) {
    ordered_json morphisms = ordered_json::array();
    for (const auto& m : category.morphisms)
        morphisms.push_back({{"label", m.label},
                             {"src", category.objects[m.src]},
                             {"trg", category.objects[m.trg]}});
    ordered_json comp = ordered_json::array();
    for (const auto& [pair, h] : category.comp)
        comp.push_back({{"first", pair.first}, {"second", pair.second}, {"composite", h}});
    return {{"objects", category.objects},
            {"morphisms", std::move(morphisms)},
            {"identities", category.identities},
            {"comp", std::move(comp)}};
}

ordered_json to_json(const ShortMorphismReport& report) {
    ordered_json out{{"is_prenorm", report.is_prenorm},
                     {"signature_triangle_commutes", report.signature_triangle_commutes},
                     {"contraction_holds", report.contraction_holds},
                     {"is_isometry", report.is_isometry},
                     {"is_short", report.is_short()}};
    if (!report.contraction_holds) out["contraction_witness"] = report.contraction_witness;
    return out;
}

ordered_json to_json(const ExampleReport& report) {
    ordered_json assertions = ordered_json::array();
    for (const ExampleAssertion& a : report.assertions) {
        ordered_json entry{{"label", a.label}, {"passed", a.passed}};
        if (!a.detail.empty()) entry["detail"] = a.detail;
        assertions.push_back(std::move(entry));
    }
    return {{"name", report.name},
            {"summary", report.summary},
            {"enumerated_subnorms", report.enumerated},
            {"assertions", std::move(assertions)},
            {"passed", report.passed()}};
}

ordered_json to_json(const TheoryDocument& document) {
    ordered_json signatures = ordered_json::array();
    for (const SignatureDecl& d : document.signatures)
        signatures.push_back({{"name", d.name}, {"signature", to_json(d.signature)}});
    ordered_json theories = ordered_json::array();
    for (const TheoryDecl& d : document.theories)
        theories.push_back(
            {{"name", d.name}, {"over", d.signature_name}, {"theory", to_json(d.theory)}});
    ordered_json models = ordered_json::array();
    for (const ModelDecl& d : document.models)
        models.push_back({{"name", d.name},
                          {"of", d.theory_name},
                          {"structure", to_json(d.model.structure)},
                          {"certificate", to_json(d.model.certificate)}});
    ordered_json prenorms = ordered_json::array();
    for (const PrenormDecl& d : document.prenorms)
        prenorms.push_back({{"name", d.name},
                            {"from", d.from},
                            {"to", d.to},
                            {"prenorm", to_json(d.prenorm)}});
    return {{"signatures", std::move(signatures)},
            {"theories", std::move(theories)},
            {"models", std::move(models)},
            {"prenorms", std::move(prenorms)}};
}

} // namespace normkit
