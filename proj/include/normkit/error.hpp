#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normkit {

enum class errc {
    duplicate_name,
    nullary_relation,
    bad_pairing,
    not_a_subsignature,
    kind_mismatch,
    arity_mismatch,
    pairing_not_preserved,
    not_composable,
    syntax_error,
    unknown_symbol,
    arity_error,
    unresolved_reference,
    uninterpreted_symbol,
    budget_exceeded,
    signature_mismatch,
    name_clash,
    not_embeddable,
    not_binary,
    not_a_preorder,
    signature_hom_invalid,
    phi_not_total,
    internal_invariant_violation,
    not_pivotal,
    not_nullary,
    not_prealgebraic,
    not_a_subtheory,
    target_mismatch,
    model_invalid,
    assertion_failed,
    usage,
};

std::string_view errc_name(errc code);

/// Library-wide exception: an error code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace normkit
