#include "normkit/prenorm.hpp"

#include "normkit/error.hpp"

#include <algorithm>

namespace normkit {

namespace {

std::vector<Tuple> all_tuples(std::size_t carrier_size, std::size_t arity) {
    std::vector<Tuple> out;
    Tuple current(arity, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= carrier_size;
    if (carrier_size == 0 && arity > 0) return out;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        out.push_back(current);
        for (std::size_t i = arity; i-- > 0;) {
            if (++current[i] < carrier_size) break;
            current[i] = 0;
        }
    }
    return out;
}

std::vector<std::string> tuple_labels(const FiniteCarrier& carrier, const Tuple& tuple) {
    std::vector<std::string> out;
    out.reserve(tuple.size());
    for (std::size_t i : tuple) out.push_back(carrier.elements[i]);
    return out;
}

} // namespace

Model make_model(Theory theory, FiniteStructure structure, std::size_t budget) {
    structure.validate();
    SatisfactionReport report = models(structure, theory, budget);
    if (!report.satisfied) {
        for (const AxiomVerdict& v : report.verdicts)
            if (!v.holds)
                throw Error(errc::model_invalid, "structure violates axiom '" + v.axiom + "'");
    }
    return Model{std::move(theory), std::move(structure), std::move(report)};
}

PrenormReport check_prenorm(const Model& source, const Model& target, const SignatureHom& alpha,
                            const CarrierMap& phi) {
    try {
        check_signature_hom(alpha.map, source.structure.signature, target.structure.signature);
    } catch (const Error& e) {
        throw Error(errc::signature_hom_invalid, e.what());
    }
    const std::size_t n1 = source.structure.carrier.size();
    const std::size_t n2 = target.structure.carrier.size();
    if (phi.size() != n1)
        throw Error(errc::phi_not_total, "phi has " + std::to_string(phi.size()) +
                                             " entries for a carrier of size " + std::to_string(n1));
    for (std::size_t v : phi)
        if (v >= n2) throw Error(errc::phi_not_total, "phi entry out of target carrier range");

    PrenormReport report;
    bool all = true;

    // Condition (i): (phi(f1(a)), f2(phi(a))) in the relation paired with alpha(f).
    for (const Symbol& fn : source.structure.signature.functions) {
        ConditionVerdict verdict;
        verdict.symbol = fn.name;
        verdict.holds = true;
        const std::string& image_fn = alpha.apply(fn.name);
        const std::string& rel = target.structure.signature.paired_relation(image_fn);
        for (const Tuple& args : all_tuples(n1, fn.arity)) {
            const std::size_t lhs = phi[source.structure.apply(fn.name, args)];
            Tuple mapped;
            mapped.reserve(args.size());
            for (std::size_t a : args) mapped.push_back(phi[a]);
            const std::size_t rhs = target.structure.apply(image_fn, mapped);
            if (!target.structure.related(rel, {lhs, rhs})) {
                verdict.holds = false;
                verdict.counterexample = tuple_labels(source.structure.carrier, args);
                verdict.lhs_label = target.structure.carrier.elements[lhs];
                verdict.rhs_label = target.structure.carrier.elements[rhs];
                break;
            }
        }
        all = all && verdict.holds;
        report.condition_i.push_back(std::move(verdict));
    }

    // Condition (ii): phi is monotonic for each source relation.
    for (const Symbol& rel : source.structure.signature.relations) {
        ConditionVerdict verdict;
        verdict.symbol = rel.name;
        verdict.holds = true;
        const std::string& image_rel = alpha.apply(rel.name);
        for (const Tuple& tuple : source.structure.rel_tables.at(rel.name)) {
            Tuple mapped;
            mapped.reserve(tuple.size());
            for (std::size_t a : tuple) mapped.push_back(phi[a]);
            if (!target.structure.related(image_rel, mapped)) {
                verdict.holds = false;
                verdict.counterexample = tuple_labels(source.structure.carrier, tuple);
                break;
            }
        }
        all = all && verdict.holds;
        report.condition_ii.push_back(std::move(verdict));
    }

    report.passed = all;
    if (all) {
        report.is_subnorm = classify_theory(source.theory).subalgebraic &&
                            classify_theory(target.theory).subalgebraic;
        bool homo = true;
        const RelTable diag = diagonal_relation(n2);
        for (const Symbol& rel : source.structure.signature.relations)
            if (target.structure.rel_tables.at(alpha.apply(rel.name)) != diag) {
                homo = false;
                break;
            }
        report.is_homomorphism = homo;
    }
    return report;
}

Prenorm make_prenorm(Model source, Model target, SignatureHom alpha, CarrierMap phi) {
    PrenormReport report = check_prenorm(source, target, alpha, phi);
    return Prenorm{std::move(source), std::move(target), std::move(alpha), std::move(phi),
                   std::move(report)};
}

Prenorm identity_prenorm(const Model& model) {
    CarrierMap phi(model.structure.carrier.size());
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = i;
    return make_prenorm(model, model, identity_hom(model.structure.signature), std::move(phi));
}

Prenorm compose_prenorms(const Prenorm& first, const Prenorm& second) {
    if (!(first.target == second.source))
        throw Error(errc::not_composable, "target of first prenorm differs from source of second");
    if (!first.report.passed || !second.report.passed)
        throw Error(errc::not_composable, "cannot compose unverified prenorms");
    SignatureHom gamma = compose_signature_homs(first.alpha, second.alpha);
    CarrierMap theta(first.phi.size());
    for (std::size_t i = 0; i < first.phi.size(); ++i) theta[i] = second.phi[first.phi[i]];
    Prenorm out = make_prenorm(first.source, second.target, std::move(gamma), std::move(theta));
    if (!out.report.passed)
        throw Error(errc::internal_invariant_violation,
                    "composite of two verified prenorms failed verification");
    return out;
}

DefinitenessClass classify_definiteness(const Prenorm& prenorm, const std::string& target_constant) {
    const Model& target = prenorm.target;
    const PivotResult pivot = find_pivot(target.structure);
    if (!pivot.pivotal || pivot.empty_pivotal)
        throw Error(errc::not_pivotal, "target model has no pivot relation");
    const Symbol* pivot_sym = target.structure.signature.find_relation(*pivot.pivot);
    if (pivot_sym->arity != 2)
        throw Error(errc::not_pivotal, "pivot relation is not binary");
    const RelTable& leq = target.structure.rel_tables.at(*pivot.pivot);

    const Symbol* constant = target.structure.signature.find_function(target_constant);
    if (!constant || constant->arity != 0)
        throw Error(errc::not_nullary, "'" + target_constant + "' is not a nullary function symbol");
    const std::size_t c2 = target.structure.constant(target_constant);

    DefinitenessClass out;
    out.upward_semidefinite = true;
    out.downward_semidefinite = true;
    for (std::size_t v : prenorm.phi) {
        if (!leq.count({c2, v})) out.upward_semidefinite = false;
        if (!leq.count({v, c2})) out.downward_semidefinite = false;
    }
    out.indefinite = !out.upward_semidefinite && !out.downward_semidefinite;

    // Elements of A1 interpreted by constants that alpha sends to the target constant.
    std::set<std::size_t> excluded;
    for (const Symbol& fn : prenorm.source.structure.signature.functions)
        if (fn.arity == 0 && prenorm.alpha.apply(fn.name) == target_constant)
            excluded.insert(prenorm.source.structure.constant(fn.name));
    out.exclusion_set_empty = excluded.empty();

    bool off_constant_distinct = true;
    for (std::size_t a = 0; a < prenorm.phi.size(); ++a)
        if (!excluded.count(a) && prenorm.phi[a] == c2) {
            off_constant_distinct = false;
            break;
        }
    out.upward_definite = out.upward_semidefinite && off_constant_distinct;
    out.downward_definite = out.downward_semidefinite && off_constant_distinct;

    out.trivial = true;
    for (std::size_t a = 1; a < prenorm.phi.size(); ++a)
        if (prenorm.phi[a] != prenorm.phi[0]) {
            out.trivial = false;
            break;
        }
    return out;
}

std::vector<SignatureHom> enumerate_signature_homs(const Signature& source,
                                                   const Signature& target) {
    std::vector<std::vector<std::size_t>> fn_choices, rel_choices;
    for (const Symbol& s : source.functions) {
        std::vector<std::size_t> images;
        for (std::size_t j = 0; j < target.functions.size(); ++j)
            if (target.functions[j].arity == s.arity) images.push_back(j);
        if (images.empty()) return {};
        fn_choices.push_back(std::move(images));
    }
    for (const Symbol& s : source.relations) {
        std::vector<std::size_t> images;
        for (std::size_t j = 0; j < target.relations.size(); ++j)
            if (target.relations[j].arity == s.arity) images.push_back(j);
        if (images.empty()) return {};
        rel_choices.push_back(std::move(images));
    }

    std::vector<SignatureHom> out;
    std::vector<std::size_t> fn_pick(fn_choices.size(), 0), rel_pick(rel_choices.size(), 0);
    auto advance = [](std::vector<std::size_t>& pick,
                      const std::vector<std::vector<std::size_t>>& choices) {
        for (std::size_t i = pick.size(); i-- > 0;) {
            if (++pick[i] < choices[i].size()) return true;
            pick[i] = 0;
        }
        return false;
    };
    while (true) {
        do {
            std::map<std::string, std::string> candidate;
            for (std::size_t i = 0; i < source.functions.size(); ++i)
                candidate[source.functions[i].name] = target.functions[fn_choices[i][fn_pick[i]]].name;
            for (std::size_t i = 0; i < source.relations.size(); ++i)
                candidate[source.relations[i].name] = target.relations[rel_choices[i][rel_pick[i]]].name;
            try {
                out.push_back(check_signature_hom(candidate, source, target));
            } catch (const Error&) {
                // pairing not preserved; skip this candidate
            }
        } while (advance(rel_pick, rel_choices));
        if (!advance(fn_pick, fn_choices)) break;
    }
    return out;
}

std::vector<Prenorm> enumerate_prenorms(const Model& source, const Model& target,
                                        const std::optional<SignatureHom>& alpha,
                                        std::size_t budget) {
    std::vector<SignatureHom> homs;
    if (alpha) {
        homs.push_back(*alpha);
    } else {
        homs = enumerate_signature_homs(source.structure.signature, target.structure.signature);
    }
    const std::size_t n1 = source.structure.carrier.size();
    const std::size_t n2 = target.structure.carrier.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n1; ++i) {
        if (n2 != 0 && total > budget / n2)
            throw Error(errc::budget_exceeded, "candidate map space exceeds budget");
        total *= n2;
    }
    if (n2 == 0 && n1 > 0) total = 0;

    std::vector<Prenorm> out;
    for (const SignatureHom& hom : homs) {
        CarrierMap phi(n1, 0);
        for (std::size_t k = 0; k < total; ++k) {
            PrenormReport report = check_prenorm(source, target, hom, phi);
            if (report.passed)
                out.push_back(Prenorm{source, target, hom, phi, std::move(report)});
            for (std::size_t i = n1; i-- > 0;) {
                if (++phi[i] < n2) break;
                phi[i] = 0;
            }
        }
    }
    return out;
}

namespace {

void check_is_subtheory(const Theory& theory, const Theory& sub) {
    if (!is_subsignature(sub.signature, theory.signature))
        throw Error(errc::not_a_subtheory, "signature is not a subsignature");
    const Theory expected = subtheory(theory, sub.signature);
    if (sub.axioms.size() != expected.axioms.size())
        throw Error(errc::not_a_subtheory, "axiom set is not the induced subtheory's");
    for (const NamedAxiom& axiom : sub.axioms)
        if (!expected.contains_axiom(axiom.formula))
            throw Error(errc::not_a_subtheory,
                        "axiom '" + axiom.name + "' is not an axiom of the induced subtheory");
}

} // namespace

Model restrict_model(const Model& model, const Theory& sub) {
    check_is_subtheory(model.theory, sub);
    FiniteStructure restricted;
    restricted.carrier = model.structure.carrier;
    restricted.signature = sub.signature;
    for (const Symbol& fn : sub.signature.functions)
        restricted.fn_tables[fn.name] = model.structure.fn_tables.at(fn.name);
    for (const Symbol& rel : sub.signature.relations)
        restricted.rel_tables[rel.name] = model.structure.rel_tables.at(rel.name);
    return make_model(sub, std::move(restricted));
}

Prenorm restrict_prenorm(const Prenorm& prenorm, const Theory& source_sub,
                         const Theory& target_sub) {
    Model source = restrict_model(prenorm.source, source_sub);
    Model target = restrict_model(prenorm.target, target_sub);
    std::map<std::string, std::string> restricted_map;
    for (const Symbol& fn : source_sub.signature.functions)
        restricted_map[fn.name] = prenorm.alpha.apply(fn.name);
    for (const Symbol& rel : source_sub.signature.relations)
        restricted_map[rel.name] = prenorm.alpha.apply(rel.name);
    for (const auto& [name, image] : restricted_map)
        if (!target_sub.signature.find(image))
            throw Error(errc::not_a_subtheory,
                        "restricted hom image '" + image + "' falls outside the target subtheory");
    SignatureHom alpha =
        check_signature_hom(restricted_map, source.structure.signature, target.structure.signature);
    return make_prenorm(std::move(source), std::move(target), std::move(alpha), prenorm.phi);
}

} // namespace normkit
