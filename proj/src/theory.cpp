#include "normkit/theory.hpp"

#include "normkit/error.hpp"

#include <algorithm>

namespace normkit {

namespace {

Term V(const std::string& name) { return Term::var(name); }

} // namespace

const NamedAxiom* Theory::find_axiom(const std::string& name) const {
    for (const NamedAxiom& a : axioms)
        if (a.name == name) return &a;
    return nullptr;
}

bool Theory::contains_axiom(const ClosedFormula& formula) const {
    return std::any_of(axioms.begin(), axioms.end(),
                       [&](const NamedAxiom& a) { return alpha_equal(a.formula, formula); });
}

Theory make_theory(std::vector<std::string> variables, Signature signature,
                   std::vector<NamedAxiom> axioms) {
    Theory theory{std::move(variables), std::move(signature), std::move(axioms)};
    for (const NamedAxiom& axiom : theory.axioms) {
        validate_formula(axiom.formula, theory.signature);
        for (const std::string& v : axiom.formula.vars)
            if (std::find(theory.variables.begin(), theory.variables.end(), v) ==
                theory.variables.end())
                throw Error(errc::unknown_symbol,
                            "axiom '" + axiom.name + "' quantifies '" + v + "' outside V");
    }
    return theory;
}

Theory subtheory(const Theory& theory, const Signature& sub) {
    if (!is_subsignature(sub, theory.signature))
        throw Error(errc::not_a_subsignature, "not a subsignature of the theory's signature");
    Theory out{theory.variables, sub, {}};
    for (const NamedAxiom& axiom : theory.axioms) {
        bool keep = true;
        for (const std::string& s : symbols_of(axiom.formula))
            if (!sub.find(s)) {
                keep = false;
                break;
            }
        if (keep) out.axioms.push_back(axiom);
    }
    return out;
}

ClosedFormula reflexivity_axiom(const std::string& rel) {
    return {{"x"}, Formula::rel_atom(rel, {V("x"), V("x")})};
}

ClosedFormula transitivity_axiom(const std::string& rel) {
    return {{"x", "y", "z"},
            Formula::implies(Formula::conj(Formula::rel_atom(rel, {V("x"), V("y")}),
                                           Formula::rel_atom(rel, {V("y"), V("z")})),
                             Formula::rel_atom(rel, {V("x"), V("z")}))};
}

ClosedFormula antisymmetry_axiom(const std::string& rel) {
    return {{"x", "y"},
            Formula::implies(Formula::conj(Formula::rel_atom(rel, {V("x"), V("y")}),
                                           Formula::rel_atom(rel, {V("y"), V("x")})),
                             Formula::equal(V("x"), V("y")))};
}

TheoryClass classify_theory(const Theory& theory) {
    TheoryClass out;
    out.algebraic = theory.signature.relations.empty();
    if (!theory.signature.is_balanced()) return out;
    for (const Symbol& rel : theory.signature.relations)
        if (rel.arity != 2) return out;
    bool pre = true, sub = true;
    for (const Symbol& rel : theory.signature.relations) {
        if (!theory.contains_axiom(reflexivity_axiom(rel.name)) ||
            !theory.contains_axiom(transitivity_axiom(rel.name)))
            pre = false;
        if (!theory.contains_axiom(antisymmetry_axiom(rel.name))) sub = false;
    }
    out.prealgebraic = pre;
    out.subalgebraic = pre && sub;
    return out;
}

Theory embodiment(const Theory& theory, EmbodimentMode mode) {
    Theory out = theory;
    if (!out.signature.is_balanced()) {
        if (!out.signature.relations.empty())
            throw Error(errc::not_embeddable, "unbalanced signature with relation symbols");
        for (const Symbol& fn : out.signature.functions) {
            const std::string rel = "leq_" + fn.name;
            if (out.signature.find(rel))
                throw Error(errc::name_clash, "generated relation name '" + rel + "' already used");
            out.signature.relations.push_back({rel, SymbolKind::relation, 2});
            out.signature.pairing.emplace(fn.name, rel);
        }
    }
    for (const Symbol& rel : out.signature.relations) {
        if (rel.arity != 2)
            throw Error(errc::not_embeddable, "relation '" + rel.name + "' is not binary");
        if (!out.contains_axiom(reflexivity_axiom(rel.name)))
            out.axioms.push_back({"refl_" + rel.name, reflexivity_axiom(rel.name)});
        if (!out.contains_axiom(transitivity_axiom(rel.name)))
            out.axioms.push_back({"trans_" + rel.name, transitivity_axiom(rel.name)});
        if (mode == EmbodimentMode::subalgebraic && !out.contains_axiom(antisymmetry_axiom(rel.name)))
            out.axioms.push_back({"antisym_" + rel.name, antisymmetry_axiom(rel.name)});
    }
    return out;
}

namespace {

ClosedFormula associativity_axiom(const std::string& f) {
    return {{"x", "y", "z"},
            Formula::equal(Term::apply(f, {Term::apply(f, {V("x"), V("y")}), V("z")}),
                           Term::apply(f, {V("x"), Term::apply(f, {V("y"), V("z")})}))};
}

ClosedFormula neutrality_axiom(const std::string& f, const std::string& e) {
    return {{"x"},
            Formula::conj(Formula::equal(Term::apply(f, {V("x"), Term::apply(e)}), V("x")),
                          Formula::equal(Term::apply(f, {Term::apply(e), V("x")}), V("x")))};
}

ClosedFormula inverses_axiom(const std::string& f, const std::string& u, const std::string& e) {
    return {{"x"},
            Formula::conj(
                Formula::equal(Term::apply(f, {V("x"), Term::apply(u, {V("x")})}), Term::apply(e)),
                Formula::equal(Term::apply(f, {Term::apply(u, {V("x")}), V("x")}), Term::apply(e)))};
}

ClosedFormula left_distributivity_axiom(const std::string& mul, const std::string& add) {
    return {{"x", "y", "z"},
            Formula::equal(Term::apply(mul, {V("x"), Term::apply(add, {V("y"), V("z")})}),
                           Term::apply(add, {Term::apply(mul, {V("x"), V("y")}),
                                             Term::apply(mul, {V("x"), V("z")})}))};
}

ClosedFormula right_distributivity_axiom(const std::string& mul, const std::string& add) {
    return {{"x", "y", "z"},
            Formula::equal(Term::apply(mul, {Term::apply(add, {V("x"), V("y")}), V("z")}),
                           Term::apply(add, {Term::apply(mul, {V("x"), V("z")}),
                                             Term::apply(mul, {V("y"), V("z")})}))};
}

} // namespace

Theory standard_theory(StandardKind kind, EmbodimentMode mode) {
    std::vector<std::pair<std::string, std::size_t>> fns;
    std::vector<NamedAxiom> axioms;

    const bool has_star = kind == StandardKind::rg || kind == StandardKind::rig ||
                          kind == StandardKind::rng || kind == StandardKind::ring;
    const bool has_u = kind == StandardKind::grp || kind == StandardKind::rng ||
                       kind == StandardKind::ring;
    const bool has_zero = kind != StandardKind::sgrp;
    const bool has_one = kind == StandardKind::rig || kind == StandardKind::ring;

    fns.push_back({"plus", 2});
    if (has_star) fns.push_back({"star", 2});
    if (has_u) fns.push_back({"u", 1});
    if (has_zero) fns.push_back({"zero", 0});
    if (has_one) fns.push_back({"one", 0});

    std::vector<std::pair<std::string, std::size_t>> rels;
    std::vector<std::pair<std::string, std::string>> pairing;
    for (const auto& [fname, arity] : fns) {
        (void)arity;
        rels.push_back({"leq_" + fname, 2});
        pairing.push_back({fname, "leq_" + fname});
    }

    axioms.push_back({"assoc_plus", associativity_axiom("plus")});
    if (has_zero) axioms.push_back({"neut_zero", neutrality_axiom("plus", "zero")});
    if (has_u) axioms.push_back({"inv_plus", inverses_axiom("plus", "u", "zero")});
    if (has_star) {
        axioms.push_back({"distl_star", left_distributivity_axiom("star", "plus")});
        axioms.push_back({"distr_star", right_distributivity_axiom("star", "plus")});
        axioms.push_back({"assoc_star", associativity_axiom("star")});
    }
    if (has_one) axioms.push_back({"neut_one", neutrality_axiom("star", "one")});

    Theory algebraic = make_theory(kDefaultVariables, make_signature(fns, rels, pairing),
                                   std::move(axioms));
    return embodiment(algebraic, mode);
}

SatisfactionReport models(const FiniteStructure& structure, const Theory& theory,
                          std::size_t budget) {
    if (!(structure.signature == theory.signature))
        throw Error(errc::signature_mismatch,
                    "structure does not interpret exactly the theory's signature");
    SatisfactionReport report;
    report.satisfied = true;
    for (const NamedAxiom& axiom : theory.axioms) {
        AxiomVerdict verdict;
        verdict.axiom = axiom.name;
        verdict.holds = satisfies_with_witness(structure, axiom.formula, verdict.witness, budget);
        report.satisfied = report.satisfied && verdict.holds;
        report.verdicts.push_back(std::move(verdict));
    }
    return report;
}

} // namespace normkit
