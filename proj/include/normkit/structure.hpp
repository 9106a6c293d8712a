#pragma once

#include "normkit/signature.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace normkit {

using Tuple = std::vector<std::size_t>;
using RelTable = std::set<Tuple>;

/// Finite carrier: an ordered list of distinct element labels. Elements are
/// addressed by index everywhere else.
struct FiniteCarrier {
    std::vector<std::string> elements;

    bool operator==(const FiniteCarrier&) const = default;

    std::size_t size() const { return elements.size(); }
    std::size_t index_of(const std::string& label) const;
};

/// A finite Set-structure: carrier, signature, total function tables and
/// relation tuple-sets. Function tables are stored flat in row-major order
/// (first argument most significant).
struct FiniteStructure {
    FiniteCarrier carrier;
    Signature signature;
    std::map<std::string, std::vector<std::size_t>> fn_tables;
    std::map<std::string, RelTable> rel_tables;

    bool operator==(const FiniteStructure&) const = default;

    std::size_t apply(const std::string& fn, const Tuple& args) const;
    bool related(const std::string& rel, const Tuple& args) const;
    /// Interpretation of a nullary function symbol.
    std::size_t constant(const std::string& fn) const;

    /// Validates totality of every table against signature and carrier.
    void validate() const;

    bool has_diagonal_relations() const;
};

struct RelationFlags {
    bool reflexive = false;
    bool transitive = false;
    bool antisymmetric = false;
    // witnesses for failures, as element-label tuples
    std::vector<std::string> reflexive_witness;
    std::vector<std::string> transitive_witness;
    std::vector<std::string> antisymmetric_witness;

    bool is_preorder() const { return reflexive && transitive; }
    bool is_partial_order() const { return is_preorder() && antisymmetric; }
};

RelationFlags relation_flags(const FiniteStructure& structure, const std::string& rel);

/// Result of pivot detection. `empty_pivotal` marks the degenerate case of a
/// relation-free signature, which counts as pivotal.
struct PivotResult {
    bool pivotal = false;
    bool empty_pivotal = false;
    std::optional<std::string> pivot; // set iff pivotal and not empty_pivotal
};

PivotResult find_pivot(const FiniteStructure& structure);

/// Same function tables, every relation table replaced by the diagonal.
FiniteStructure algebraize_structure(const FiniteStructure& structure);

RelTable diagonal_relation(std::size_t carrier_size);
RelTable chain_relation(const std::vector<std::size_t>& chain);

/// The pointwise preorder on functions P -> Q induced by a preorder on Q.
/// Functions are listed lexicographically as tables over P's index order.
struct PointwiseOrder {
    std::vector<std::vector<std::size_t>> functions;
    std::set<std::pair<std::size_t, std::size_t>> related; // indices into `functions`
};

PointwiseOrder pointwise_preorder(const FiniteCarrier& domain, const FiniteStructure& target,
                                  const std::string& rel);

} // namespace normkit
