#pragma once

#include "normkit/formula.hpp"
#include "normkit/signature.hpp"
#include "normkit/structure.hpp"

#include <string>
#include <vector>

namespace normkit {

struct NamedAxiom {
    std::string name;
    ClosedFormula formula;

    bool operator==(const NamedAxiom&) const = default;
};

/// A theory (V, sigma, Xi): variable pool, signature and named axioms.
struct Theory {
    std::vector<std::string> variables;
    Signature signature;
    std::vector<NamedAxiom> axioms;

    bool operator==(const Theory&) const = default;

    const NamedAxiom* find_axiom(const std::string& name) const;
    /// Membership up to bound-variable renaming.
    bool contains_axiom(const ClosedFormula& formula) const;
};

struct TheoryClass {
    bool prealgebraic = false;
    bool subalgebraic = false;
    bool algebraic = false;
};

enum class EmbodimentMode { prealgebraic, subalgebraic };
enum class StandardKind { sgrp, mon, grp, rg, rig, rng, ring };

inline const std::vector<std::string> kDefaultVariables = {"x", "y", "z", "w"};

Theory make_theory(std::vector<std::string> variables, Signature signature,
                   std::vector<NamedAxiom> axioms);

/// The subtheory with signature sub: exactly the axioms whose symbols lie in
/// sub.
Theory subtheory(const Theory& theory, const Signature& sub);

TheoryClass classify_theory(const Theory& theory);

/// Smallest prealgebraic/subalgebraic extension: pairs every function symbol
/// with a fresh binary relation (relation-free case) and adds exactly the
/// missing order axioms.
Theory embodiment(const Theory& theory, EmbodimentMode mode);

Theory standard_theory(StandardKind kind, EmbodimentMode mode);

ClosedFormula reflexivity_axiom(const std::string& rel);
ClosedFormula transitivity_axiom(const std::string& rel);
ClosedFormula antisymmetry_axiom(const std::string& rel);

struct AxiomVerdict {
    std::string axiom;
    bool holds = false;
    std::vector<std::pair<std::string, std::string>> witness; // falsifying assignment
};

struct SatisfactionReport {
    bool satisfied = false;
    std::vector<AxiomVerdict> verdicts;
};

/// Per-axiom satisfaction report for A |= T. The structure must interpret
/// exactly T's signature.
SatisfactionReport models(const FiniteStructure& structure, const Theory& theory,
                          std::size_t budget = kDefaultBudget);

} // namespace normkit
