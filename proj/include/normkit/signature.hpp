#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace normkit {

enum class SymbolKind { function, relation };

/// A function or relation symbol with its logical arity (constants have
/// arity 0; relation arities are >= 1).
struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::function;
    std::size_t arity = 0;

    bool operator==(const Symbol&) const = default;
};

/// Finitary single-sorted signature: ordered function and relation symbol
/// lists drawn from one namespace, plus an optional function<->relation
/// pairing (present iff the signature is balanced by construction).
struct Signature {
    std::vector<Symbol> functions;
    std::vector<Symbol> relations;
    /// Maps function name -> paired relation name. Empty when unbalanced.
    std::map<std::string, std::string> pairing;

    bool operator==(const Signature&) const = default;

    const Symbol* find(const std::string& name) const;
    const Symbol* find_function(const std::string& name) const;
    const Symbol* find_relation(const std::string& name) const;

    bool is_balanced() const { return !pairing.empty() || (functions.empty() && relations.empty()); }
    bool is_algebraic() const { return relations.empty(); }

    /// Relation paired with a function symbol. Throws bad_pairing if absent.
    const std::string& paired_relation(const std::string& fname) const;
};

/// A validated arity- and kind-preserving symbol map between signatures.
struct SignatureHom {
    Signature source;
    Signature target;
    std::map<std::string, std::string> map;

    bool operator==(const SignatureHom&) const = default;

    const std::string& apply(const std::string& symbol) const;
    bool is_identity_on_names() const;
};

Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>& functions,
                         const std::vector<std::pair<std::string, std::size_t>>& relations,
                         const std::vector<std::pair<std::string, std::string>>& pairing = {});

/// sub must occur in sup symbol-by-symbol with equal kind and arity.
bool is_subsignature(const Signature& sub, const Signature& sup);

SignatureHom canonical_injection(const Signature& sub, const Signature& sup);

SignatureHom identity_hom(const Signature& sig);

/// Validates a candidate symbol map as a signature homomorphism. When both
/// signatures are balanced the map must also preserve the pairing.
SignatureHom check_signature_hom(const std::map<std::string, std::string>& candidate,
                                 const Signature& source, const Signature& target);

SignatureHom compose_signature_homs(const SignatureHom& first, const SignatureHom& second);

} // namespace normkit
