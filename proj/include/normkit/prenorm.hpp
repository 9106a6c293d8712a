#pragma once

#include "normkit/structure.hpp"
#include "normkit/theory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace normkit {

/// A verified pair (theory, structure) with its satisfaction certificate.
struct Model {
    Theory theory;
    FiniteStructure structure;
    SatisfactionReport certificate;

    bool operator==(const Model& other) const {
        return theory == other.theory && structure == other.structure;
    }
};

/// Validates the structure and its satisfaction of the theory; throws
/// ModelInvalid on failure.
Model make_model(Theory theory, FiniteStructure structure, std::size_t budget = kDefaultBudget);

/// Carrier map as a table over the source carrier's index order.
using CarrierMap = std::vector<std::size_t>;

struct ConditionVerdict {
    std::string symbol;
    bool holds = false;
    std::vector<std::string> counterexample; // argument labels for a failing tuple
    std::string lhs_label, rhs_label;        // the two sides that failed to relate
};

struct PrenormReport {
    std::vector<ConditionVerdict> condition_i;  // per function symbol
    std::vector<ConditionVerdict> condition_ii; // per relation symbol
    bool passed = false;
    bool is_subnorm = false;       // both theories subalgebraic and all verdicts pass
    bool is_homomorphism = false;  // target relations used are all diagonal
};

/// A checked prenorm (alpha, phi) between models.
struct Prenorm {
    Model source;
    Model target;
    SignatureHom alpha;
    CarrierMap phi;
    PrenormReport report;

    bool same_arrow(const Prenorm& other) const {
        return alpha.map == other.alpha.map && phi == other.phi;
    }
};

PrenormReport check_prenorm(const Model& source, const Model& target, const SignatureHom& alpha,
                            const CarrierMap& phi);

/// As check_prenorm, returning the packaged Prenorm (report may be failing).
Prenorm make_prenorm(Model source, Model target, SignatureHom alpha, CarrierMap phi);

Prenorm identity_prenorm(const Model& model);

/// Composition per the main proposition; the composite is re-verified and a
/// failing report raises InternalInvariantViolation.
Prenorm compose_prenorms(const Prenorm& first, const Prenorm& second);

struct DefinitenessClass {
    bool upward_semidefinite = false;
    bool downward_semidefinite = false;
    bool upward_definite = false;
    bool downward_definite = false;
    bool indefinite = false;
    bool trivial = false;
    bool exclusion_set_empty = false; // alpha^{-1}(constant) was empty
};

/// Definiteness of a prenorm relative to a nullary symbol of the target
/// signature and the target's pivot order.
DefinitenessClass classify_definiteness(const Prenorm& prenorm, const std::string& target_constant);

/// All pairing-preserving signature homs between two balanced signatures, in
/// lexicographic order of the function-symbol image table.
std::vector<SignatureHom> enumerate_signature_homs(const Signature& source,
                                                   const Signature& target);

/// Complete brute-force enumeration of the prenorms source -> target, in
/// lexicographic (alpha table, phi table) order. When alpha is omitted every
/// pairing-preserving signature hom is tried.
std::vector<Prenorm> enumerate_prenorms(const Model& source, const Model& target,
                                        const std::optional<SignatureHom>& alpha = std::nullopt,
                                        std::size_t budget = kDefaultBudget);

/// Forgetful restriction on objects: interpretation restricted to the
/// subtheory's signature.
Model restrict_model(const Model& model, const Theory& sub);

/// Forgetful restriction on morphisms: source and target restricted to the
/// given subtheories (pass the full theory to leave an endpoint unchanged);
/// alpha restricted accordingly.
Prenorm restrict_prenorm(const Prenorm& prenorm, const Theory& source_sub,
                         const Theory& target_sub);

} // namespace normkit
