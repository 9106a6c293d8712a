#include "normkit/signature.hpp"

#include "normkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace normkit {

std::string_view errc_name(errc code) {
    switch (code) {
    case errc::duplicate_name: return "DuplicateName";
    case errc::nullary_relation: return "NullaryRelation";
    case errc::bad_pairing: return "BadPairing";
    case errc::not_a_subsignature: return "NotASubsignature";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::pairing_not_preserved: return "PairingNotPreserved";
    case errc::not_composable: return "NotComposable";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::arity_error: return "ArityError";
    case errc::unresolved_reference: return "UnresolvedReference";
    case errc::uninterpreted_symbol: return "UninterpretedSymbol";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::name_clash: return "NameClash";
    case errc::not_embeddable: return "NotEmbeddable";
    case errc::not_binary: return "NotBinary";
    case errc::not_a_preorder: return "NotAPreorder";
    case errc::signature_hom_invalid: return "SignatureHomInvalid";
    case errc::phi_not_total: return "PhiNotTotal";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
    case errc::not_pivotal: return "NotPivotal";
    case errc::not_nullary: return "NotNullary";
    case errc::not_prealgebraic: return "NotPrealgebraic";
    case errc::not_a_subtheory: return "NotASubtheory";
    case errc::target_mismatch: return "TargetMismatch";
    case errc::model_invalid: return "ModelInvalid";
    case errc::assertion_failed: return "AssertionFailed";
    case errc::usage: return "Usage";
    }
    return "UnknownError";
}

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

const Symbol* Signature::find(const std::string& name) const {
    if (const Symbol* s = find_function(name)) return s;
    return find_relation(name);
}

const Symbol* Signature::find_function(const std::string& name) const {
    for (const Symbol& s : functions)
        if (s.name == name) return &s;
    return nullptr;
}

const Symbol* Signature::find_relation(const std::string& name) const {
    for (const Symbol& s : relations)
        if (s.name == name) return &s;
    return nullptr;
}

const std::string& Signature::paired_relation(const std::string& fname) const {
    auto it = pairing.find(fname);
    if (it == pairing.end())
        throw Error(errc::bad_pairing, "no relation paired with function '" + fname + "'");
    return it->second;
}

const std::string& SignatureHom::apply(const std::string& symbol) const {
    auto it = map.find(symbol);
    if (it == map.end())
        throw Error(errc::unknown_symbol, "signature hom undefined on '" + symbol + "'");
    return it->second;
}

bool SignatureHom::is_identity_on_names() const {
    return std::all_of(map.begin(), map.end(),
                       [](const auto& kv) { return kv.first == kv.second; });
}

Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>& functions,
                         const std::vector<std::pair<std::string, std::size_t>>& relations,
                         const std::vector<std::pair<std::string, std::string>>& pairing) {
    Signature sig;
    std::set<std::string> seen;
    for (const auto& [name, arity] : functions) {
        if (!valid_identifier(name))
            throw Error(errc::syntax_error, "invalid symbol name '" + name + "'");
        if (!seen.insert(name).second)
            throw Error(errc::duplicate_name, "symbol '" + name + "' declared twice");
        sig.functions.push_back({name, SymbolKind::function, arity});
    }
    for (const auto& [name, arity] : relations) {
        if (!valid_identifier(name))
            throw Error(errc::syntax_error, "invalid symbol name '" + name + "'");
        if (!seen.insert(name).second)
            throw Error(errc::duplicate_name, "symbol '" + name + "' declared twice");
        if (arity == 0)
            throw Error(errc::nullary_relation, "relation '" + name + "' has arity 0");
        sig.relations.push_back({name, SymbolKind::relation, arity});
    }
    if (!pairing.empty()) {
        std::set<std::string> used_fns, used_rels;
        for (const auto& [fname, rname] : pairing) {
            if (!sig.find_function(fname))
                throw Error(errc::bad_pairing, "paired function '" + fname + "' not declared");
            if (!sig.find_relation(rname))
                throw Error(errc::bad_pairing, "paired relation '" + rname + "' not declared");
            if (!used_fns.insert(fname).second || !used_rels.insert(rname).second)
                throw Error(errc::bad_pairing, "pairing is not a bijection");
            sig.pairing.emplace(fname, rname);
        }
        if (used_fns.size() != sig.functions.size() || used_rels.size() != sig.relations.size())
            throw Error(errc::bad_pairing, "pairing does not cover every symbol");
    } else if (!sig.functions.empty() || !sig.relations.empty()) {
        // unbalanced unless trivially empty; nothing to record
    }
    return sig;
}

bool is_subsignature(const Signature& sub, const Signature& sup) {
    for (const Symbol& s : sub.functions) {
        const Symbol* t = sup.find_function(s.name);
        if (!t || t->arity != s.arity) return false;
    }
    for (const Symbol& s : sub.relations) {
        const Symbol* t = sup.find_relation(s.name);
        if (!t || t->arity != s.arity) return false;
    }
    return true;
}

SignatureHom canonical_injection(const Signature& sub, const Signature& sup) {
    if (!is_subsignature(sub, sup))
        throw Error(errc::not_a_subsignature, "not a subsignature");
    SignatureHom hom{sub, sup, {}};
    for (const Symbol& s : sub.functions) hom.map.emplace(s.name, s.name);
    for (const Symbol& s : sub.relations) hom.map.emplace(s.name, s.name);
    return hom;
}

SignatureHom identity_hom(const Signature& sig) { return canonical_injection(sig, sig); }

SignatureHom check_signature_hom(const std::map<std::string, std::string>& candidate,
                                 const Signature& source, const Signature& target) {
    for (const Symbol& s : source.functions) {
        auto it = candidate.find(s.name);
        if (it == candidate.end())
            throw Error(errc::unknown_symbol, "candidate map undefined on '" + s.name + "'");
        const Symbol* image = target.find(it->second);
        if (!image)
            throw Error(errc::unknown_symbol, "image symbol '" + it->second + "' not in target");
        if (image->kind != SymbolKind::function)
            throw Error(errc::kind_mismatch, "'" + s.name + "' maps to relation '" + it->second + "'");
        if (image->arity != s.arity)
            throw Error(errc::arity_mismatch, "'" + s.name + "' (arity " + std::to_string(s.arity) +
                                                  ") maps to '" + it->second + "' (arity " +
                                                  std::to_string(image->arity) + ")");
    }
    for (const Symbol& s : source.relations) {
        auto it = candidate.find(s.name);
        if (it == candidate.end())
            throw Error(errc::unknown_symbol, "candidate map undefined on '" + s.name + "'");
        const Symbol* image = target.find(it->second);
        if (!image)
            throw Error(errc::unknown_symbol, "image symbol '" + it->second + "' not in target");
        if (image->kind != SymbolKind::relation)
            throw Error(errc::kind_mismatch, "'" + s.name + "' maps to function '" + it->second + "'");
        if (image->arity != s.arity)
            throw Error(errc::arity_mismatch, "'" + s.name + "' (arity " + std::to_string(s.arity) +
                                                  ") maps to '" + it->second + "' (arity " +
                                                  std::to_string(image->arity) + ")");
    }
    if (source.is_balanced() && target.is_balanced()) {
        for (const auto& [fname, rname] : source.pairing) {
            const std::string& fimg = candidate.at(fname);
            const std::string& rimg = candidate.at(rname);
            if (target.paired_relation(fimg) != rimg)
                throw Error(errc::pairing_not_preserved,
                            "pair (" + fname + ", " + rname + ") maps to unpaired (" + fimg + ", " +
                                rimg + ")");
        }
    }
    SignatureHom hom{source, target, {}};
    for (const Symbol& s : source.functions) hom.map.emplace(s.name, candidate.at(s.name));
    for (const Symbol& s : source.relations) hom.map.emplace(s.name, candidate.at(s.name));
    return hom;
}

SignatureHom compose_signature_homs(const SignatureHom& first, const SignatureHom& second) {
    if (!(first.target == second.source))
        throw Error(errc::not_composable, "target of first hom differs from source of second");
    std::map<std::string, std::string> composed;
    for (const auto& [name, mid] : first.map) composed.emplace(name, second.apply(mid));
    return check_signature_hom(composed, first.source, second.target);
}

} // namespace normkit
