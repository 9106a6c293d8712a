#pragma once

#include "normkit/prenorm.hpp"

#include <string>
#include <vector>

namespace normkit {

struct SignatureDecl {
    std::string name;
    Signature signature;

    bool operator==(const SignatureDecl&) const = default;
};

struct TheoryDecl {
    std::string name;
    std::string signature_name;
    Theory theory;

    bool operator==(const TheoryDecl&) const = default;
};

struct ModelDecl {
    std::string name;
    std::string theory_name;
    Model model;

    bool operator==(const ModelDecl& other) const {
        return name == other.name && theory_name == other.theory_name && model == other.model;
    }
};

struct PrenormDecl {
    std::string name;
    std::string from;
    std::string to;
    Prenorm prenorm; // report may be failing; the declaration still parses

    bool operator==(const PrenormDecl& other) const {
        return name == other.name && from == other.from && to == other.to &&
               prenorm.source == other.prenorm.source && prenorm.target == other.prenorm.target &&
               prenorm.same_arrow(other.prenorm);
    }
};

/// One parsed and fully resolved source file: every theory names a declared
/// signature, every model a declared theory, every prenorm two declared
/// models.
struct TheoryDocument {
    std::vector<SignatureDecl> signatures;
    std::vector<TheoryDecl> theories;
    std::vector<ModelDecl> models;
    std::vector<PrenormDecl> prenorms;

    bool operator==(const TheoryDocument&) const = default;

    const SignatureDecl* find_signature(const std::string& name) const;
    const TheoryDecl* find_theory(const std::string& name) const;
    const ModelDecl* find_model(const std::string& name) const;
    const PrenormDecl* find_prenorm(const std::string& name) const;
};

TheoryDocument parse_document(const std::string& text);

/// Canonical pretty-printer; parse(print(d)) is structurally equal to d.
std::string print_document(const TheoryDocument& document);

std::string print_formula(const ClosedFormula& formula);

} // namespace normkit
