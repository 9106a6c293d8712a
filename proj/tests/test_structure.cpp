#include "normkit/error.hpp"
#include "normkit/examples.hpp"
#include "normkit/structure.hpp"
#include "normkit/theory.hpp"

#include <doctest.h>

using namespace normkit;

namespace {

FiniteStructure rel_structure(std::size_t n, RelTable table) {
    FiniteStructure s;
    for (std::size_t i = 0; i < n; ++i) s.carrier.elements.push_back(std::to_string(i));
    s.signature = make_signature({}, {{"r", 2}});
    s.rel_tables["r"] = std::move(table);
    return s;
}

RelTable full_relation(std::size_t n) {
    RelTable t;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t.insert({a, b});
    return t;
}

} // namespace

TEST_CASE("relation flags by exhaustive check") {
    const FiniteStructure chain = rel_structure(3, chain_relation({0, 1, 2}));
    RelationFlags flags = relation_flags(chain, "r");
    CHECK(flags.is_partial_order());

    const FiniteStructure diag = rel_structure(3, diagonal_relation(3));
    CHECK(relation_flags(diag, "r").is_partial_order());

    const FiniteStructure full = rel_structure(2, full_relation(2));
    flags = relation_flags(full, "r");
    CHECK(flags.reflexive);
    CHECK(flags.transitive);
    CHECK_FALSE(flags.antisymmetric);
    CHECK(flags.antisymmetric_witness.size() == 2);

    FiniteStructure bad = rel_structure(2, {});
    bad.signature = make_signature({}, {{"r", 3}});
    bad.rel_tables["r"] = {};
    try {
        relation_flags(bad, "r");
        FAIL("ternary relation");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_binary);
    }
}

TEST_CASE("pivot detection with lexicographic tie-break") {
    const Model n2 = build_truncated_semiring_model(2);
    PivotResult pivot = find_pivot(n2.structure);
    REQUIRE(pivot.pivotal);
    CHECK_FALSE(pivot.empty_pivotal);
    CHECK(*pivot.pivot == "leq_one"); // all four tables equal; lexicographically least name

    // Equality sits inside the standard order: the larger table is the pivot.
    FiniteStructure mixed;
    mixed.carrier.elements = {"0", "1", "2"};
    mixed.signature = make_signature({{"plus", 2}, {"zero", 0}},
                                     {{"leq_plus", 2}, {"leq_zero", 2}},
                                     {{"plus", "leq_plus"}, {"zero", "leq_zero"}});
    mixed.fn_tables["plus"] = {0, 1, 2, 1, 2, 2, 2, 2, 2};
    mixed.fn_tables["zero"] = {0};
    mixed.rel_tables["leq_plus"] = diagonal_relation(3);
    mixed.rel_tables["leq_zero"] = chain_relation({0, 1, 2});
    pivot = find_pivot(mixed);
    REQUIRE(pivot.pivotal);
    CHECK(*pivot.pivot == "leq_zero");

    // Opposite orders: no pivot.
    FiniteStructure opposed = rel_structure(2, chain_relation({0, 1}));
    opposed.signature = make_signature({}, {{"le", 2}, {"ge", 2}});
    opposed.rel_tables["le"] = chain_relation({0, 1});
    opposed.rel_tables["ge"] = chain_relation({1, 0});
    pivot = find_pivot(opposed);
    CHECK_FALSE(pivot.pivotal);

    // Relation-free signatures are pivotal by convention.
    FiniteStructure bare;
    bare.carrier.elements = {"0"};
    bare.signature = make_signature({{"c", 0}}, {});
    bare.fn_tables["c"] = {0};
    pivot = find_pivot(bare);
    CHECK(pivot.pivotal);
    CHECK(pivot.empty_pivotal);
}

TEST_CASE("every relation table embeds in the pivot") {
    const Model z3 = build_cyclic_group_model(3, FixtureMode::subalgebraic);
    const PivotResult pivot = find_pivot(z3.structure);
    REQUIRE(pivot.pivotal);
    const RelTable& top = z3.structure.rel_tables.at(*pivot.pivot);
    for (const auto& [name, table] : z3.structure.rel_tables)
        for (const Tuple& t : table) CHECK(top.count(t));
}

TEST_CASE("algebraization replaces relations by the diagonal") {
    const Model z2 = build_cyclic_group_model(2, FixtureMode::algebraic);
    CHECK(algebraize_structure(z2.structure) == z2.structure); // fixpoint

    const Model n2 = build_truncated_semiring_model(2);
    const FiniteStructure flat = algebraize_structure(n2.structure);
    CHECK(flat.has_diagonal_relations());
    CHECK(flat.fn_tables == n2.structure.fn_tables);
    // The order axioms hold for equality, so the algebraization still models.
    CHECK(models(flat, n2.theory).satisfied);
}

TEST_CASE("pointwise preorder on function spaces") {
    const Model n2 = build_truncated_semiring_model(2);

    FiniteCarrier singleton{{"p"}};
    PointwiseOrder po = pointwise_preorder(singleton, n2.structure, "leq_plus");
    CHECK(po.functions.size() == 3);
    CHECK(po.related.size() == 6); // isomorphic to the chain on 3 elements

    FiniteCarrier two{{"p", "q"}};
    po = pointwise_preorder(two, n2.structure, "leq_plus");
    CHECK(po.functions.size() == 9);
    for (std::size_t f = 0; f < 9; ++f)
        for (std::size_t g = 0; g < 9; ++g)
            if (po.related.count({f, g}) && po.related.count({g, f})) CHECK(f == g);

    // A full target relation induces the full relation on maps.
    FiniteStructure full;
    full.carrier.elements = {"0", "1"};
    full.signature = make_signature({}, {{"r", 2}});
    full.rel_tables["r"] = full_relation(2);
    po = pointwise_preorder(two, full, "r");
    CHECK(po.related.size() == 16);

    // Non-preorders are rejected.
    FiniteStructure bad;
    bad.carrier.elements = {"0", "1"};
    bad.signature = make_signature({}, {{"r", 2}});
    bad.rel_tables["r"] = {{0, 1}};
    try {
        pointwise_preorder(two, bad, "r");
        FAIL("irreflexive relation");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_preorder);
    }
}

TEST_CASE("structure validation catches broken tables") {
    const Model z2 = build_cyclic_group_model(2, FixtureMode::algebraic);
    FiniteStructure s = z2.structure;
    s.validate();
    s.fn_tables["plus"].pop_back();
    CHECK_THROWS_AS(s.validate(), Error);
    s = z2.structure;
    s.rel_tables["leq_plus"].insert({0, 5});
    CHECK_THROWS_AS(s.validate(), Error);
}
