#include "normkit/error.hpp"
#include "normkit/examples.hpp"
#include "normkit/theory.hpp"

#include <doctest.h>

#include <algorithm>

using namespace normkit;

namespace {

bool axioms_contained(const Theory& sub, const Theory& sup) {
    return std::all_of(sub.axioms.begin(), sub.axioms.end(), [&](const NamedAxiom& a) {
        return sup.contains_axiom(a.formula);
    });
}

} // namespace

TEST_CASE("the subalgebraic monoid theory has the pinned shape") {
    const Theory t_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic);
    CHECK(t_mon.signature.functions.size() == 2);
    CHECK(t_mon.signature.relations.size() == 2);
    REQUIRE(t_mon.axioms.size() == 8); // 2 algebra axioms + 6 order axioms
    CHECK(t_mon.find_axiom("assoc_plus"));
    CHECK(t_mon.find_axiom("neut_zero"));
    for (const char* rel : {"leq_plus", "leq_zero"}) {
        CHECK(t_mon.contains_axiom(reflexivity_axiom(rel)));
        CHECK(t_mon.contains_axiom(transitivity_axiom(rel)));
        CHECK(t_mon.contains_axiom(antisymmetry_axiom(rel)));
    }
}

TEST_CASE("subtheory keeps exactly the axioms over the subsignature") {
    const Theory t_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic);
    const Theory t_sgrp = standard_theory(StandardKind::sgrp, EmbodimentMode::subalgebraic);
    CHECK(subtheory(t_mon, t_sgrp.signature) == t_sgrp);
    CHECK(subtheory(t_mon, t_mon.signature) == t_mon);

    const Theory empty = subtheory(t_mon, make_signature({}, {}));
    CHECK(empty.axioms.empty());
    CHECK(empty.signature.functions.empty());

    try {
        subtheory(t_sgrp, t_mon.signature);
        FAIL("the monoid signature is not a subsignature of the semigroup one");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_subsignature);
    }
}

TEST_CASE("subtheory is monotone in the signature") {
    const Theory t_grp = standard_theory(StandardKind::grp, EmbodimentMode::subalgebraic);
    const Signature s_sgrp = standard_theory(StandardKind::sgrp, EmbodimentMode::subalgebraic)
                                 .signature;
    const Signature s_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic)
                                .signature;
    CHECK(axioms_contained(subtheory(t_grp, s_sgrp), subtheory(t_grp, s_mon)));
}

TEST_CASE("classification of theories") {
    const Theory t_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic);
    TheoryClass cls = classify_theory(t_mon);
    CHECK(cls.prealgebraic);
    CHECK(cls.subalgebraic);
    CHECK_FALSE(cls.algebraic);

    const Theory pre = standard_theory(StandardKind::mon, EmbodimentMode::prealgebraic);
    cls = classify_theory(pre);
    CHECK(cls.prealgebraic);
    CHECK_FALSE(cls.subalgebraic);

    const Theory algebraic = make_theory({"x"}, make_signature({{"f", 1}}, {}), {});
    cls = classify_theory(algebraic);
    CHECK(cls.algebraic);
    CHECK_FALSE(cls.prealgebraic); // unbalanced signature

    // Reflexivity present, transitivity missing.
    Theory broken = make_theory(
        kDefaultVariables, make_signature({{"f", 1}}, {{"r", 2}}, {{"f", "r"}}),
        {{"refl_r", reflexivity_axiom("r")}});
    CHECK_FALSE(classify_theory(broken).prealgebraic);
}

TEST_CASE("embodiment builds the smallest order extension") {
    const Theory mon_algebraic = make_theory(
        kDefaultVariables,
        standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic).signature,
        {*standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic).find_axiom(
             "assoc_plus"),
         *standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic).find_axiom(
             "neut_zero")});
    // Relation-free core with the same algebra axioms:
    Theory core = make_theory(kDefaultVariables,
                              make_signature({{"plus", 2}, {"zero", 0}}, {}),
                              mon_algebraic.axioms);
    const Theory embodied = embodiment(core, EmbodimentMode::subalgebraic);
    CHECK(embodied == standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic));
    CHECK(classify_theory(embodied).subalgebraic);

    // Idempotence, in both modes.
    CHECK(embodiment(embodied, EmbodimentMode::subalgebraic) == embodied);
    const Theory pre = embodiment(core, EmbodimentMode::prealgebraic);
    CHECK(embodiment(pre, EmbodimentMode::prealgebraic) == pre);

    // The empty theory is a fixpoint.
    const Theory empty = make_theory({}, make_signature({}, {}), {});
    CHECK(embodiment(empty, EmbodimentMode::subalgebraic) == empty);

    // Fresh-name collision.
    Theory clash = make_theory({"x"}, make_signature({{"f", 1}, {"leq_f", 0}}, {}), {});
    try {
        embodiment(clash, EmbodimentMode::prealgebraic);
        FAIL("generated relation name collides");
    } catch (const Error& e) {
        CHECK(e.code() == errc::name_clash);
    }

    // Unbalanced with relations cannot be embodied.
    Theory mixed = make_theory({"x"}, make_signature({{"f", 1}}, {{"r", 2}}), {});
    try {
        embodiment(mixed, EmbodimentMode::prealgebraic);
        FAIL("unbalanced signature with relations");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_embeddable);
    }
}

TEST_CASE("standard theories nest as expected") {
    const Theory t_sgrp = standard_theory(StandardKind::sgrp, EmbodimentMode::subalgebraic);
    const Theory t_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic);
    const Theory t_grp = standard_theory(StandardKind::grp, EmbodimentMode::subalgebraic);
    const Theory t_rg = standard_theory(StandardKind::rg, EmbodimentMode::subalgebraic);
    const Theory t_rng = standard_theory(StandardKind::rng, EmbodimentMode::subalgebraic);

    CHECK(subtheory(t_mon, t_sgrp.signature) == t_sgrp);
    CHECK(axioms_contained(t_grp, t_rng));
    CHECK(axioms_contained(t_rg, t_rng));
}

TEST_CASE("the model relation with per-axiom verdicts") {
    const Model z2 = build_cyclic_group_model(2, FixtureMode::algebraic);
    const SatisfactionReport good = models(z2.structure, z2.theory);
    CHECK(good.satisfied);
    CHECK(good.verdicts.size() == z2.theory.axioms.size());

    // Break the addition table: plus(1,1) = 1 kills the inverses axiom.
    FiniteStructure broken = z2.structure;
    broken.fn_tables["plus"][3] = 1;
    const SatisfactionReport bad = models(broken, z2.theory);
    CHECK_FALSE(bad.satisfied);
    bool found = false;
    for (const AxiomVerdict& v : bad.verdicts)
        if (v.axiom == "inv_plus") {
            found = true;
            CHECK_FALSE(v.holds);
            REQUIRE(v.witness.size() == 1);
            CHECK(v.witness[0].second == "1");
        }
    CHECK(found);

    const Model n2 = build_truncated_semiring_model(2);
    CHECK(models(n2.structure, n2.theory).satisfied);

    try {
        models(z2.structure, n2.theory);
        FAIL("signatures differ");
    } catch (const Error& e) {
        CHECK(e.code() == errc::signature_mismatch);
    }
}
