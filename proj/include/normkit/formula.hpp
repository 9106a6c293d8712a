#pragma once

#include "normkit/signature.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace normkit {

struct FiniteStructure;

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// A term over variables and the ambient signature's function symbols.
struct Term {
    enum class Kind { variable, apply };
    Kind kind = Kind::variable;
    std::string name;
    std::vector<Term> args; // apply only

    bool operator==(const Term&) const = default;

    static Term var(std::string name) { return {Kind::variable, std::move(name), {}}; }
    static Term apply(std::string fn, std::vector<Term> args = {}) {
        return {Kind::apply, std::move(fn), std::move(args)};
    }
};

/// Quantifier-free matrix: atoms are equalities and relation atoms, closed
/// under the propositional connectives.
struct Formula {
    enum class Kind { equal, rel_atom, conj, disj, neg, implies };
    Kind kind = Kind::equal;
    std::string rel;          // rel_atom only
    std::vector<Term> terms;  // equal: exactly 2; rel_atom: arity-many
    std::vector<Formula> sub; // neg: 1; conj/disj/implies: 2

    bool operator==(const Formula&) const = default;

    static Formula equal(Term lhs, Term rhs) {
        return {Kind::equal, {}, {std::move(lhs), std::move(rhs)}, {}};
    }
    static Formula rel_atom(std::string rel, std::vector<Term> args) {
        return {Kind::rel_atom, std::move(rel), std::move(args), {}};
    }
    static Formula conj(Formula lhs, Formula rhs) {
        return {Kind::conj, {}, {}, {std::move(lhs), std::move(rhs)}};
    }
    static Formula disj(Formula lhs, Formula rhs) {
        return {Kind::disj, {}, {}, {std::move(lhs), std::move(rhs)}};
    }
    static Formula neg(Formula inner) { return {Kind::neg, {}, {}, {std::move(inner)}}; }
    static Formula implies(Formula lhs, Formula rhs) {
        return {Kind::implies, {}, {}, {std::move(lhs), std::move(rhs)}};
    }
};

/// Universal closure of a quantifier-free matrix; the prefix lists the
/// quantified variables in declaration order.
struct ClosedFormula {
    std::vector<std::string> vars;
    Formula matrix;

    bool operator==(const ClosedFormula&) const = default;
};

/// Checks well-formedness against a signature: applied symbols exist with
/// matching arity and every matrix variable occurs in the prefix.
void validate_formula(const ClosedFormula& formula, const Signature& sig);

/// Non-logical symbol names occurring in the formula.
std::set<std::string> symbols_of(const ClosedFormula& formula);

/// Alpha-canonical copy: prefix variables renamed v0, v1, ... in order of
/// first occurrence in the matrix; unused prefix variables are dropped.
ClosedFormula alpha_canonical(const ClosedFormula& formula);

bool alpha_equal(const ClosedFormula& lhs, const ClosedFormula& rhs);

/// Exhaustive evaluation of the universal closure over a finite structure.
/// Refuses with BudgetExceeded when |A|^#vars exceeds the budget.
bool satisfies(const FiniteStructure& structure, const ClosedFormula& formula,
               std::size_t budget = kDefaultBudget);

/// As satisfies(), but reports a falsifying assignment (variable -> element
/// label, in prefix order) through `witness` when the formula fails.
bool satisfies_with_witness(const FiniteStructure& structure, const ClosedFormula& formula,
                            std::vector<std::pair<std::string, std::string>>& witness,
                            std::size_t budget = kDefaultBudget);

} // namespace normkit
