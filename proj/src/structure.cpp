#include "normkit/structure.hpp"

#include "normkit/error.hpp"

#include <algorithm>
#include <cmath>

namespace normkit {

std::size_t FiniteCarrier::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == label) return i;
    throw Error(errc::unknown_symbol, "element '" + label + "' not in carrier");
}

namespace {

std::size_t pow_checked(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > SIZE_MAX / base)
            throw Error(errc::budget_exceeded, "table size overflow");
        out *= base;
    }
    return out;
}

std::size_t flat_index(const Tuple& args, std::size_t carrier_size) {
    std::size_t idx = 0;
    for (std::size_t a : args) idx = idx * carrier_size + a;
    return idx;
}

} // namespace

std::size_t FiniteStructure::apply(const std::string& fn, const Tuple& args) const {
    auto it = fn_tables.find(fn);
    if (it == fn_tables.end())
        throw Error(errc::uninterpreted_symbol, "function '" + fn + "' has no table");
    return it->second.at(flat_index(args, carrier.size()));
}

bool FiniteStructure::related(const std::string& rel, const Tuple& args) const {
    auto it = rel_tables.find(rel);
    if (it == rel_tables.end())
        throw Error(errc::uninterpreted_symbol, "relation '" + rel + "' has no table");
    return it->second.count(args) > 0;
}

std::size_t FiniteStructure::constant(const std::string& fn) const { return apply(fn, {}); }

void FiniteStructure::validate() const {
    const std::size_t n = carrier.size();
    {
        std::set<std::string> seen(carrier.elements.begin(), carrier.elements.end());
        if (seen.size() != n)
            throw Error(errc::duplicate_name, "carrier labels are not distinct");
    }
    for (const Symbol& s : signature.functions) {
        auto it = fn_tables.find(s.name);
        if (it == fn_tables.end())
            throw Error(errc::uninterpreted_symbol, "no table for function '" + s.name + "'");
        const std::size_t expected = pow_checked(n, s.arity);
        if (it->second.size() != expected)
            throw Error(errc::arity_error, "table for '" + s.name + "' has " +
                                               std::to_string(it->second.size()) + " entries, expected " +
                                               std::to_string(expected));
        for (std::size_t v : it->second)
            if (v >= n) throw Error(errc::unknown_symbol, "table entry out of carrier range");
    }
    if (fn_tables.size() != signature.functions.size())
        throw Error(errc::signature_mismatch, "stray function table");
    for (const Symbol& s : signature.relations) {
        auto it = rel_tables.find(s.name);
        if (it == rel_tables.end())
            throw Error(errc::uninterpreted_symbol, "no table for relation '" + s.name + "'");
        for (const Tuple& t : it->second) {
            if (t.size() != s.arity)
                throw Error(errc::arity_error, "tuple arity mismatch in relation '" + s.name + "'");
            for (std::size_t v : t)
                if (v >= n) throw Error(errc::unknown_symbol, "tuple entry out of carrier range");
        }
    }
    if (rel_tables.size() != signature.relations.size())
        throw Error(errc::signature_mismatch, "stray relation table");
}

bool FiniteStructure::has_diagonal_relations() const {
    const RelTable diag = diagonal_relation(carrier.size());
    for (const Symbol& s : signature.relations) {
        if (s.arity != 2) return false;
        if (rel_tables.at(s.name) != diag) return false;
    }
    return true;
}

RelationFlags relation_flags(const FiniteStructure& structure, const std::string& rel) {
    const Symbol* sym = structure.signature.find_relation(rel);
    if (!sym || sym->arity != 2)
        throw Error(errc::not_binary, "relation '" + rel + "' is not binary");
    const RelTable& table = structure.rel_tables.at(rel);
    const std::size_t n = structure.carrier.size();
    const auto& labels = structure.carrier.elements;

    RelationFlags flags{true, true, true, {}, {}, {}};
    for (std::size_t a = 0; a < n && flags.reflexive; ++a)
        if (!table.count({a, a})) {
            flags.reflexive = false;
            flags.reflexive_witness = {labels[a]};
        }
    for (std::size_t a = 0; a < n && flags.transitive; ++a)
        for (std::size_t b = 0; b < n && flags.transitive; ++b) {
            if (!table.count({a, b})) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (table.count({b, c}) && !table.count({a, c})) {
                    flags.transitive = false;
                    flags.transitive_witness = {labels[a], labels[b], labels[c]};
                    break;
                }
        }
    for (std::size_t a = 0; a < n && flags.antisymmetric; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && table.count({a, b}) && table.count({b, a})) {
                flags.antisymmetric = false;
                flags.antisymmetric_witness = {labels[a], labels[b]};
                break;
            }
    return flags;
}

PivotResult find_pivot(const FiniteStructure& structure) {
    const auto& rels = structure.signature.relations;
    if (rels.empty()) return {true, true, std::nullopt};
    const std::size_t arity = rels.front().arity;
    for (const Symbol& s : rels)
        if (s.arity != arity) return {false, false, std::nullopt};
    std::vector<std::string> candidates;
    for (const Symbol& s : rels) {
        const RelTable& table = structure.rel_tables.at(s.name);
        bool contains_all = true;
        for (const Symbol& other : rels) {
            const RelTable& o = structure.rel_tables.at(other.name);
            if (!std::includes(table.begin(), table.end(), o.begin(), o.end())) {
                contains_all = false;
                break;
            }
        }
        if (contains_all) candidates.push_back(s.name);
    }
    if (candidates.empty()) return {false, false, std::nullopt};
    return {true, false, *std::min_element(candidates.begin(), candidates.end())};
}

FiniteStructure algebraize_structure(const FiniteStructure& structure) {
    FiniteStructure out = structure;
    for (const Symbol& s : out.signature.relations) {
        if (s.arity != 2)
            throw Error(errc::not_binary, "cannot algebraize non-binary relation '" + s.name + "'");
        out.rel_tables[s.name] = diagonal_relation(out.carrier.size());
    }
    return out;
}

RelTable diagonal_relation(std::size_t carrier_size) {
    RelTable out;
    for (std::size_t a = 0; a < carrier_size; ++a) out.insert({a, a});
    return out;
}

RelTable chain_relation(const std::vector<std::size_t>& chain) {
    // reflexive-transitive order of the listed chain
    RelTable out;
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i; j < chain.size(); ++j) out.insert({chain[i], chain[j]});
    return out;
}

PointwiseOrder pointwise_preorder(const FiniteCarrier& domain, const FiniteStructure& target,
                                  const std::string& rel) {
    const RelationFlags flags = relation_flags(target, rel);
    if (!flags.is_preorder())
        throw Error(errc::not_a_preorder, "relation '" + rel + "' is not a preorder");
    const RelTable& table = target.rel_tables.at(rel);
    const std::size_t p = domain.size();
    const std::size_t q = target.carrier.size();

    PointwiseOrder out;
    std::vector<std::size_t> fn(p, 0);
    const std::size_t count = [&] {
        std::size_t c = 1;
        for (std::size_t i = 0; i < p; ++i) c *= q;
        return c;
    }();
    out.functions.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.functions.push_back(fn);
        for (std::size_t i = p; i-- > 0;) {
            if (++fn[i] < q) break;
            fn[i] = 0;
        }
    }
    for (std::size_t i = 0; i < out.functions.size(); ++i)
        for (std::size_t j = 0; j < out.functions.size(); ++j) {
            bool rel_ij = true;
            for (std::size_t x = 0; x < p; ++x)
                if (!table.count({out.functions[i][x], out.functions[j][x]})) {
                    rel_ij = false;
                    break;
                }
            if (rel_ij) out.related.insert({i, j});
        }
    return out;
}

} // namespace normkit
