#include "normkit/formula.hpp"

#include "normkit/error.hpp"
#include "normkit/structure.hpp"

#include <map>

namespace normkit {

namespace {

void collect_term_vars(const Term& term, std::vector<std::string>& out) {
    if (term.kind == Term::Kind::variable) {
        for (const auto& v : out)
            if (v == term.name) return;
        out.push_back(term.name);
    } else {
        for (const Term& a : term.args) collect_term_vars(a, out);
    }
}

void collect_vars(const Formula& matrix, std::vector<std::string>& out) {
    for (const Term& t : matrix.terms) collect_term_vars(t, out);
    for (const Formula& f : matrix.sub) collect_vars(f, out);
}

void validate_term(const Term& term, const Signature& sig,
                   const std::vector<std::string>& vars) {
    if (term.kind == Term::Kind::variable) {
        for (const auto& v : vars)
            if (v == term.name) return;
        throw Error(errc::unknown_symbol, "variable '" + term.name + "' not in quantifier prefix");
    }
    const Symbol* sym = sig.find_function(term.name);
    if (!sym)
        throw Error(errc::unknown_symbol, "'" + term.name + "' is not a function symbol");
    if (sym->arity != term.args.size())
        throw Error(errc::arity_error, "'" + term.name + "' expects " + std::to_string(sym->arity) +
                                           " arguments, got " + std::to_string(term.args.size()));
    for (const Term& a : term.args) validate_term(a, sig, vars);
}

void validate_matrix(const Formula& matrix, const Signature& sig,
                     const std::vector<std::string>& vars) {
    switch (matrix.kind) {
    case Formula::Kind::equal:
        if (matrix.terms.size() != 2)
            throw Error(errc::arity_error, "equality atom needs exactly two terms");
        break;
    case Formula::Kind::rel_atom: {
        const Symbol* sym = sig.find_relation(matrix.rel);
        if (!sym)
            throw Error(errc::unknown_symbol, "'" + matrix.rel + "' is not a relation symbol");
        if (sym->arity != matrix.terms.size())
            throw Error(errc::arity_error, "'" + matrix.rel + "' expects " +
                                               std::to_string(sym->arity) + " arguments, got " +
                                               std::to_string(matrix.terms.size()));
        break;
    }
    case Formula::Kind::neg:
        if (matrix.sub.size() != 1)
            throw Error(errc::arity_error, "negation takes one subformula");
        break;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::implies:
        if (matrix.sub.size() != 2)
            throw Error(errc::arity_error, "binary connective takes two subformulas");
        break;
    }
    for (const Term& t : matrix.terms) validate_term(t, sig, vars);
    for (const Formula& f : matrix.sub) validate_matrix(f, sig, vars);
}

void rename_term(Term& term, const std::map<std::string, std::string>& renaming) {
    if (term.kind == Term::Kind::variable) {
        term.name = renaming.at(term.name);
    } else {
        for (Term& a : term.args) rename_term(a, renaming);
    }
}

void rename_matrix(Formula& matrix, const std::map<std::string, std::string>& renaming) {
    for (Term& t : matrix.terms) rename_term(t, renaming);
    for (Formula& f : matrix.sub) rename_matrix(f, renaming);
}

void collect_symbols_term(const Term& term, std::set<std::string>& out) {
    if (term.kind == Term::Kind::apply) {
        out.insert(term.name);
        for (const Term& a : term.args) collect_symbols_term(a, out);
    }
}

void collect_symbols(const Formula& matrix, std::set<std::string>& out) {
    if (matrix.kind == Formula::Kind::rel_atom) out.insert(matrix.rel);
    for (const Term& t : matrix.terms) collect_symbols_term(t, out);
    for (const Formula& f : matrix.sub) collect_symbols(f, out);
}

struct Evaluator {
    const FiniteStructure& structure;
    std::map<std::string, std::size_t> assignment;

    std::size_t eval_term(const Term& term) const {
        if (term.kind == Term::Kind::variable) return assignment.at(term.name);
        Tuple args;
        args.reserve(term.args.size());
        for (const Term& a : term.args) args.push_back(eval_term(a));
        return structure.apply(term.name, args);
    }

    bool eval(const Formula& matrix) const {
        switch (matrix.kind) {
        case Formula::Kind::equal:
            return eval_term(matrix.terms[0]) == eval_term(matrix.terms[1]);
        case Formula::Kind::rel_atom: {
            Tuple args;
            args.reserve(matrix.terms.size());
            for (const Term& t : matrix.terms) args.push_back(eval_term(t));
            return structure.related(matrix.rel, args);
        }
        case Formula::Kind::conj: return eval(matrix.sub[0]) && eval(matrix.sub[1]);
        case Formula::Kind::disj: return eval(matrix.sub[0]) || eval(matrix.sub[1]);
        case Formula::Kind::neg: return !eval(matrix.sub[0]);
        case Formula::Kind::implies: return !eval(matrix.sub[0]) || eval(matrix.sub[1]);
        }
        return false;
    }
};

} // namespace

void validate_formula(const ClosedFormula& formula, const Signature& sig) {
    validate_matrix(formula.matrix, sig, formula.vars);
}

std::set<std::string> symbols_of(const ClosedFormula& formula) {
    std::set<std::string> out;
    collect_symbols(formula.matrix, out);
    return out;
}

ClosedFormula alpha_canonical(const ClosedFormula& formula) {
    std::vector<std::string> occurring;
    collect_vars(formula.matrix, occurring);
    std::map<std::string, std::string> renaming;
    ClosedFormula out;
    for (std::size_t i = 0; i < occurring.size(); ++i) {
        std::string fresh = "v" + std::to_string(i);
        renaming.emplace(occurring[i], fresh);
        out.vars.push_back(std::move(fresh));
    }
    out.matrix = formula.matrix;
    rename_matrix(out.matrix, renaming);
    return out;
}

bool alpha_equal(const ClosedFormula& lhs, const ClosedFormula& rhs) {
    return alpha_canonical(lhs) == alpha_canonical(rhs);
}

bool satisfies(const FiniteStructure& structure, const ClosedFormula& formula,
               std::size_t budget) {
    std::vector<std::pair<std::string, std::string>> ignored;
    return satisfies_with_witness(structure, formula, ignored, budget);
}

bool satisfies_with_witness(const FiniteStructure& structure, const ClosedFormula& formula,
                            std::vector<std::pair<std::string, std::string>>& witness,
                            std::size_t budget) {
    validate_formula(formula, structure.signature);
    witness.clear();
    const std::size_t n = structure.carrier.size();
    const std::size_t k = formula.vars.size();

    if (n == 0 && k > 0) return true; // vacuous over the empty carrier
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / n)
            throw Error(errc::budget_exceeded, "assignment space exceeds budget");
        total *= n;
    }

    Evaluator ev{structure, {}};
    Tuple values(k, 0);
    for (std::size_t step = 0; step < total; ++step) {
        for (std::size_t i = 0; i < k; ++i) ev.assignment[formula.vars[i]] = values[i];
        if (!ev.eval(formula.matrix)) {
            for (std::size_t i = 0; i < k; ++i)
                witness.emplace_back(formula.vars[i], structure.carrier.elements[values[i]]);
            return false;
        }
        for (std::size_t i = k; i-- > 0;) {
            if (++values[i] < n) break;
            values[i] = 0;
        }
    }
    return true;
}

} // namespace normkit
