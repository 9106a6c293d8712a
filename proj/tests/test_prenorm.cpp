#include "normkit/error.hpp"
#include "normkit/examples.hpp"
#include "normkit/prenorm.hpp"

#include <doctest.h>

#include <algorithm>

using namespace normkit;

namespace {

Theory mon() { return standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic); }

Model z2_mon() {
    return restrict_model(build_cyclic_group_model(2, FixtureMode::algebraic), mon());
}

Model n2_mon() { return restrict_model(build_truncated_semiring_model(2), mon()); }

/// Independent oracle: classical universal-algebra homomorphisms, checked by
/// equality on function symbols only, ignoring relations entirely.
std::vector<CarrierMap> classical_homomorphisms(const FiniteStructure& a,
                                                const FiniteStructure& b) {
    std::vector<CarrierMap> out;
    const std::size_t n = a.carrier.size(), m = b.carrier.size();
    CarrierMap phi(n, 0);
    while (true) {
        bool hom = true;
        for (const Symbol& fn : a.signature.functions) {
            std::size_t rows = 1;
            for (std::size_t i = 0; i < fn.arity; ++i) rows *= n;
            for (std::size_t row = 0; row < rows && hom; ++row) {
                Tuple args(fn.arity, 0);
                std::size_t rest = row;
                for (std::size_t i = fn.arity; i-- > 0;) {
                    args[i] = rest % n;
                    rest /= n;
                }
                Tuple mapped(fn.arity);
                for (std::size_t i = 0; i < fn.arity; ++i) mapped[i] = phi[args[i]];
                if (phi[a.apply(fn.name, args)] != b.apply(fn.name, mapped)) hom = false;
            }
        }
        if (hom) out.push_back(phi);
        std::size_t i = n;
        while (i > 0) {
            if (++phi[i - 1] < m) break;
            phi[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

} // namespace

TEST_CASE("make_model verifies satisfaction") {
    const Model z2 = z2_mon();
    CHECK(z2.certificate.satisfied);

    FiniteStructure broken = z2.structure;
    broken.fn_tables["zero"] = {1};
    try {
        make_model(z2.theory, broken);
        FAIL("0 is no longer neutral");
    } catch (const Error& e) {
        CHECK(e.code() == errc::model_invalid);
    }
}

TEST_CASE("check_prenorm on the canonical monoid example") {
    const Model src = z2_mon(), trg = n2_mon();
    const SignatureHom alpha = identity_hom(src.structure.signature);

    PrenormReport report = check_prenorm(src, trg, alpha, {0, 1});
    CHECK(report.passed);
    CHECK(report.is_subnorm);
    CHECK_FALSE(report.is_homomorphism); // target orders are not diagonal

    report = check_prenorm(src, trg, alpha, {1, 0});
    CHECK_FALSE(report.passed);
    bool zero_failed = false;
    for (const ConditionVerdict& v : report.condition_i)
        if (v.symbol == "zero" && !v.holds) zero_failed = true;
    CHECK(zero_failed);

    const Prenorm id = identity_prenorm(trg);
    CHECK(id.report.passed);

    try {
        check_prenorm(src, trg, alpha, {0});
        FAIL("phi is not total");
    } catch (const Error& e) {
        CHECK(e.code() == errc::phi_not_total);
    }
}

TEST_CASE("composition follows the closure result") {
    const Model src = z2_mon(), trg = n2_mon();
    const SignatureHom alpha = identity_hom(src.structure.signature);
    const Prenorm phi1 = make_prenorm(src, trg, alpha, {0, 1});

    // Right identity.
    const Prenorm with_id = compose_prenorms(phi1, identity_prenorm(trg));
    CHECK(with_id.same_arrow(phi1));

    // Doubling on N2 is itself a monoid subnorm; compose it in.
    const Prenorm doubling = make_prenorm(trg, trg, identity_hom(trg.structure.signature),
                                          {0, 2, 2});
    CHECK(doubling.report.passed);
    const Prenorm composite = compose_prenorms(phi1, doubling);
    CHECK(composite.phi == CarrierMap{0, 2});
    CHECK(composite.report.passed);

    // Associativity on a composable triple.
    const Prenorm left = compose_prenorms(compose_prenorms(phi1, doubling), doubling);
    const Prenorm right = compose_prenorms(phi1, compose_prenorms(doubling, doubling));
    CHECK(left.same_arrow(right));

    try {
        compose_prenorms(doubling, phi1);
        FAIL("endpoints do not match");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_composable);
    }
}

TEST_CASE("definiteness classification") {
    const Model src = z2_mon(), trg = n2_mon();
    const SignatureHom alpha = identity_hom(src.structure.signature);

    DefinitenessClass cls = classify_definiteness(make_prenorm(src, trg, alpha, {0, 1}), "zero");
    CHECK(cls.upward_definite);
    CHECK(cls.upward_semidefinite);
    CHECK_FALSE(cls.downward_semidefinite);
    CHECK_FALSE(cls.trivial);
    CHECK_FALSE(cls.indefinite);

    cls = classify_definiteness(make_prenorm(src, trg, alpha, {0, 0}), "zero");
    CHECK(cls.upward_semidefinite);
    CHECK_FALSE(cls.upward_definite);
    CHECK(cls.trivial);

    try {
        classify_definiteness(make_prenorm(src, trg, alpha, {0, 1}), "plus");
        FAIL("plus is not nullary");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_nullary);
    }
}

TEST_CASE("enumeration is the pinned brute-force oracle") {
    const Model src = z2_mon(), trg = n2_mon();
    const SignatureHom alpha = identity_hom(src.structure.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(src, trg, alpha);
    REQUIRE(subnorms.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(subnorms[i].phi == CarrierMap{0, i}); // lexicographic order
        CHECK(subnorms[i].report.is_subnorm);
    }

    // Endo-enumeration always contains the identity.
    const std::vector<Prenorm> endos = enumerate_prenorms(src, src, identity_hom(src.structure.signature));
    CHECK(std::any_of(endos.begin(), endos.end(), [&](const Prenorm& p) {
        return p.same_arrow(identity_prenorm(src));
    }));

    // No signature hom exists from a binary-symbol signature to a nullary one.
    const Model unary = make_model(
        make_theory({"x"}, make_signature({{"f", 2}}, {}), {}),
        [] {
            FiniteStructure s;
            s.carrier.elements = {"0"};
            s.signature = make_signature({{"f", 2}}, {});
            s.fn_tables["f"] = {0};
            return s;
        }());
    const Model nullary = make_model(
        make_theory({"x"}, make_signature({{"c", 0}}, {}), {}),
        [] {
            FiniteStructure s;
            s.carrier.elements = {"0"};
            s.signature = make_signature({{"c", 0}}, {});
            s.fn_tables["c"] = {0};
            return s;
        }());
    CHECK(enumerate_prenorms(unary, nullary).empty());
}

TEST_CASE("prenorms between algebraic models are exactly the classical homomorphisms") {
    const Model z2 = z2_mon();
    const std::vector<CarrierMap> direct =
        classical_homomorphisms(z2.structure, z2.structure);
    REQUIRE(direct.size() == 2); // identity and the constant-zero map

    const std::vector<Prenorm> enumerated =
        enumerate_prenorms(z2, z2, identity_hom(z2.structure.signature));
    REQUIRE(enumerated.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(enumerated[i].phi == direct[i]);
        CHECK(enumerated[i].report.is_homomorphism);
    }
}

TEST_CASE("forced constants under a least-element pivot") {
    const Model src = z2_mon(), trg = n2_mon();
    for (const Prenorm& p : enumerate_prenorms(src, trg)) CHECK(p.phi[0] == 0);
}

TEST_CASE("forgetful restriction of models and prenorms") {
    const Theory t_sgrp = standard_theory(StandardKind::sgrp, EmbodimentMode::subalgebraic);
    const Model n2 = n2_mon();
    const Model n2_sgrp = restrict_model(n2, t_sgrp);
    CHECK(n2_sgrp.theory == t_sgrp);
    CHECK(n2_sgrp.structure.carrier == n2.structure.carrier);
    CHECK(n2_sgrp.structure.fn_tables.size() == 1);
    CHECK(n2_sgrp.certificate.satisfied);

    const Model z2 = z2_mon();
    const Prenorm full = make_prenorm(z2, n2, identity_hom(z2.structure.signature), {0, 1});
    const Prenorm cut = restrict_prenorm(full, t_sgrp, t_sgrp);
    CHECK(cut.source.theory == t_sgrp);
    CHECK(cut.target.theory == t_sgrp);
    CHECK(cut.phi == full.phi);
    CHECK(cut.report.passed);

    // Restricting by the full theory is the identity.
    const Prenorm same = restrict_prenorm(full, z2.theory, n2.theory);
    CHECK(same.same_arrow(full));

    try {
        restrict_model(n2_sgrp, mon());
        FAIL("the monoid theory is not a subtheory of the semigroup one");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_subtheory);
    }
}
