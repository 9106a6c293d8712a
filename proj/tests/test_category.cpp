#include "normkit/category.hpp"
#include "normkit/error.hpp"
#include "normkit/examples.hpp"

#include <doctest.h>

#include <algorithm>

using namespace normkit;

namespace {

Model z2_mon() {
    return restrict_model(build_cyclic_group_model(2, FixtureMode::algebraic),
                          standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic));
}

Model n2_mon() {
    return restrict_model(build_truncated_semiring_model(2),
                          standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic));
}

CategoryPresentation terminal_category() {
    CategoryPresentation c;
    c.objects = {"pt"};
    c.morphisms = {{"id_pt", 0, 0}};
    c.identities = {0};
    c.comp[{0, 0}] = 0;
    return c;
}

} // namespace

TEST_CASE("category laws on the terminal category") {
    CHECK(check_category_laws(terminal_category()).all_pass());
}

TEST_CASE("seeded law violations are caught with witnesses") {
    CategoryPresentation c;
    c.objects = {"pt"};
    c.morphisms = {{"id_pt", 0, 0}, {"f", 0, 0}};
    c.identities = {0};
    c.comp[{0, 0}] = 0;
    c.comp[{0, 1}] = 1;
    c.comp[{1, 0}] = 0; // fault: f after id should be f
    c.comp[{1, 1}] = 1;
    const LawReport report = check_category_laws(c);
    CHECK_FALSE(report.all_pass());
    CHECK_FALSE(report.identity_neutral);
    bool witnessed = false;
    for (const LawWitness& w : report.failures)
        if (w.morphisms == std::vector<std::size_t>{1}) witnessed = true;
    CHECK(witnessed);

    // Deleting a composable entry breaks coherence.
    CategoryPresentation holes = terminal_category();
    holes.comp.clear();
    CHECK_FALSE(check_category_laws(holes).src_trg_coherent);
}

TEST_CASE("the subnorm category over the two fixture monoid models") {
    const PnrCategory category =
        build_pnr({{"Z2", z2_mon()}, {"N2", n2_mon()}}, NormMode::subnorm);
    CHECK(check_category_laws(category.presentation).all_pass());

    std::size_t z2_to_n2 = 0;
    for (const auto& m : category.presentation.morphisms)
        if (m.src == 0 && m.trg == 1) ++z2_to_n2;
    CHECK(z2_to_n2 == 3);

    // The one-object case still contains the identity.
    const PnrCategory endo = build_pnr({{"Z2", z2_mon()}}, NormMode::subnorm);
    CHECK(check_category_laws(endo.presentation).all_pass());
    CHECK(endo.presentation.identities.size() == 1);
    CHECK(endo.presentation.morphisms.size() >= 2); // identity and constant-to-0

    // Merely prealgebraic members are rejected in subnorm mode.
    const Theory pre = standard_theory(StandardKind::mon, EmbodimentMode::prealgebraic);
    const Model loose = restrict_model(z2_mon(), subtheory(z2_mon().theory, pre.signature));
    (void)loose;
    Model pre_model = z2_mon();
    pre_model.theory.axioms.erase(
        std::remove_if(pre_model.theory.axioms.begin(), pre_model.theory.axioms.end(),
                       [](const NamedAxiom& a) { return a.name.starts_with("antisym_"); }),
        pre_model.theory.axioms.end());
    try {
        build_pnr({{"Z2", pre_model}}, NormMode::subnorm);
        FAIL("theory is not subalgebraic");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_prealgebraic);
    }
}

TEST_CASE("short morphisms between normed models") {
    const Model z2 = z2_mon(), n2 = n2_mon();
    const SignatureHom alpha = identity_hom(z2.structure.signature);
    const NormedModel heavy =
        make_normed_model("heavy", z2, make_prenorm(z2, n2, alpha, {0, 2}));
    const NormedModel light =
        make_normed_model("light", z2, make_prenorm(z2, n2, alpha, {0, 1}));

    const SignatureHom beta = identity_hom(z2.structure.signature);
    ShortMorphismReport report = check_short_morphism(heavy, light, beta, {0, 1});
    CHECK(report.is_prenorm);
    CHECK(report.signature_triangle_commutes);
    CHECK(report.contraction_holds); // 1 <= 2
    CHECK_FALSE(report.is_isometry);
    CHECK(report.is_short());

    report = check_short_morphism(light, heavy, beta, {0, 1});
    CHECK_FALSE(report.contraction_holds); // 2 <= 1 fails at a = 1
    CHECK(report.contraction_witness == "1");

    report = check_short_morphism(light, light, beta, {0, 1});
    CHECK(report.is_short());
    CHECK(report.is_isometry);
}

TEST_CASE("the category of normed models over a pivotal target") {
    const Model z2 = z2_mon(), n2 = n2_mon();
    const SignatureHom alpha = identity_hom(z2.structure.signature);
    const std::vector<NormedModel> objects = {
        make_normed_model("heavy", z2, make_prenorm(z2, n2, alpha, {0, 2})),
        make_normed_model("light", z2, make_prenorm(z2, n2, alpha, {0, 1})),
    };
    const PnrCategory category = build_pnr_over_target(objects, n2);
    CHECK(check_category_laws(category.presentation).all_pass());

    // The identity carrier map is short from heavy to light but not back.
    std::size_t forward = 0, backward = 0;
    for (std::size_t i = 0; i < category.arrows.size(); ++i) {
        const auto& m = category.presentation.morphisms[i];
        if (category.arrows[i].phi == CarrierMap{0, 1}) {
            if (m.src == 0 && m.trg == 1) ++forward;
            if (m.src == 1 && m.trg == 0) ++backward;
        }
    }
    CHECK(forward == 1);
    CHECK(backward == 0);

    // Empty object list: an empty category, laws vacuously true.
    const PnrCategory empty = build_pnr_over_target({}, n2);
    CHECK(check_category_laws(empty.presentation).all_pass());

    // A non-pivotal target is rejected.
    Model twisted = n2;
    twisted.structure.rel_tables["leq_plus"] = chain_relation({2, 1, 0});
    try {
        build_pnr_over_target({}, twisted);
        FAIL("opposite chains have no pivot");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_pivotal);
    }
}

TEST_CASE("short morphisms compose") {
    const Model z2 = z2_mon(), n2 = n2_mon();
    const SignatureHom alpha = identity_hom(z2.structure.signature);
    const std::vector<NormedModel> objects = {
        make_normed_model("a", z2, make_prenorm(z2, n2, alpha, {0, 2})),
        make_normed_model("b", z2, make_prenorm(z2, n2, alpha, {0, 1})),
        make_normed_model("c", z2, make_prenorm(z2, n2, alpha, {0, 0})),
    };
    const PnrCategory category = build_pnr_over_target(objects, n2);
    // Closure under composition is what close_presentation verifies; spot-check
    // that every composite passes the short check again.
    for (const auto& [pair, h] : category.presentation.comp) {
        const auto& f = category.presentation.morphisms[pair.first];
        const auto& g = category.presentation.morphisms[pair.second];
        const ShortMorphismReport r = check_short_morphism(
            objects[f.src], objects[g.trg], category.arrows[h].alpha, category.arrows[h].phi);
        CHECK(r.is_short());
    }
}

TEST_CASE("forgetful restriction of a whole category is functorial") {
    const Theory t_sgrp = standard_theory(StandardKind::sgrp, EmbodimentMode::subalgebraic);
    const PnrCategory category =
        build_pnr({{"Z2", z2_mon()}, {"N2", n2_mon()}}, NormMode::subnorm);
    const PnrCategory restricted = forgetful_restrict_category(category, t_sgrp);
    CHECK(restricted.presentation.objects == category.presentation.objects);
    REQUIRE(restricted.arrows.size() == category.arrows.size());

    // Identities restrict to identities.
    for (const std::size_t id : restricted.presentation.identities) {
        CHECK(restricted.arrows[id].alpha.is_identity_on_names());
        for (std::size_t a = 0; a < restricted.arrows[id].phi.size(); ++a)
            CHECK(restricted.arrows[id].phi[a] == a);
    }

    // Composition commutes with restriction.
    for (const auto& [pair, h] : category.presentation.comp) {
        const Prenorm via_restrict = compose_prenorms(restricted.arrows[pair.first],
                                                      restricted.arrows[pair.second]);
        CHECK(via_restrict.same_arrow(restricted.arrows[h]));
    }
}

TEST_CASE("DOT export lists objects and labeled arrows") {
    const std::string dot = to_dot(terminal_category());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("pt") != std::string::npos);
    CHECK(dot.find("id_pt") != std::string::npos);
}
