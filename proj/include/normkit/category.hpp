#pragma once

#include "normkit/prenorm.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace normkit {

inline constexpr std::size_t kDefaultMorphismBudget = 10'000;

/// Explicit finite presentation of a category: object and morphism lists,
/// source/target/identity assignments and a partial composition table.
/// comp[{f, g}] is defined iff trg(f) == src(g) and names "g after f".
struct CategoryPresentation {
    struct Morphism {
        std::string label;
        std::size_t src = 0;
        std::size_t trg = 0;
    };

    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<std::size_t> identities; // per object, index into morphisms
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
};

struct LawWitness {
    std::string description;
    std::vector<std::size_t> morphisms;
};

struct LawReport {
    bool src_trg_coherent = false;   // axiom (i) plus comp-domain coverage
    bool identity_endpoints = false; // axiom (ii)
    bool associative = false;        // axiom (iii)
    bool identity_neutral = false;   // axiom (iv)
    std::vector<LawWitness> failures;

    bool all_pass() const {
        return src_trg_coherent && identity_endpoints && associative && identity_neutral;
    }
};

LawReport check_category_laws(const CategoryPresentation& category);

std::string to_dot(const CategoryPresentation& category);

enum class NormMode { prenorm, subnorm };

/// A materialized Pnr/Snr category: the presentation plus the prenorm behind
/// each morphism index.
struct PnrCategory {
    CategoryPresentation presentation;
    std::vector<Prenorm> arrows;
};

/// Builds the category of the given models with hom-sets fully enumerated
/// (all pairing-preserving signature homs) and composition by prenorm
/// composition. mode == subnorm additionally requires every theory to be
/// subalgebraic.
PnrCategory build_pnr(const std::vector<std::pair<std::string, Model>>& named_models,
                      NormMode mode, std::size_t map_budget = kDefaultBudget,
                      std::size_t morphism_budget = kDefaultMorphismBudget);

/// A model together with a verified prenorm into the fixed target.
struct NormedModel {
    std::string name;
    Model model;
    Prenorm norm; // norm.source == model, norm.target == the shared target
};

NormedModel make_normed_model(std::string name, Model model, Prenorm norm);

struct ShortMorphismReport {
    bool is_prenorm = false;
    bool signature_triangle_commutes = false;
    bool contraction_holds = false;
    bool is_isometry = false;
    std::string contraction_witness; // source element label, when contraction fails

    bool is_short() const { return is_prenorm && signature_triangle_commutes && contraction_holds; }
};

/// Verdicts for a candidate short morphism (beta, psi) between two normed
/// models over the same pivotal target.
ShortMorphismReport check_short_morphism(const NormedModel& first, const NormedModel& second,
                                         const SignatureHom& beta, const CarrierMap& psi);

/// The category of normed models over the given pivotal target, with
/// morphisms the enumerated prenorms passing check_short_morphism.
PnrCategory build_pnr_over_target(const std::vector<NormedModel>& objects, const Model& target,
                                  std::size_t map_budget = kDefaultBudget,
                                  std::size_t morphism_budget = kDefaultMorphismBudget);

/// Applies the forgetful functor to every object and morphism of a built
/// category (same subtheory on both endpoints).
PnrCategory forgetful_restrict_category(const PnrCategory& category, const Theory& sub);

} // namespace normkit
