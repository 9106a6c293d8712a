#include "normkit/examples.hpp"

#include "normkit/error.hpp"

#include <algorithm>
#include <sstream>

namespace normkit {

namespace {

std::vector<std::string> number_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

template <typename F>
std::vector<std::size_t> binary_table(std::size_t n, F op) {
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = op(a, b);
    return table;
}

RelTable standard_chain(std::size_t n) {
    std::vector<std::size_t> chain(n);
    for (std::size_t i = 0; i < n; ++i) chain[i] = i;
    return chain_relation(chain);
}

void fill_relations(FiniteStructure& structure, const RelTable& table) {
    for (const Symbol& rel : structure.signature.relations)
        structure.rel_tables[rel.name] = table;
}

/// All maps {0..from-1} -> {0..to-1} in lexicographic table order.
std::vector<CarrierMap> all_maps(std::size_t from, std::size_t to) {
    std::vector<CarrierMap> out;
    CarrierMap current(from, 0);
    while (true) {
        out.push_back(current);
        std::size_t i = from;
        while (i > 0) {
            if (++current[i - 1] < to) break;
            current[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    if (to == 0 && from > 0) out.clear();
    return out;
}

void assert_on(ExampleReport& report, const std::string& label, bool passed,
               const std::string& detail = "") {
    report.assertions.push_back({label, passed, detail});
}

} // namespace

Model build_cyclic_group_model(std::size_t n, FixtureMode mode) {
    if (n == 0) throw Error(errc::model_invalid, "cyclic group requires n >= 1");
    Theory theory = standard_theory(StandardKind::grp, EmbodimentMode::subalgebraic);
    FiniteStructure structure;
    structure.carrier.elements = number_labels(n);
    structure.signature = theory.signature;
    structure.fn_tables["plus"] = binary_table(n, [n](std::size_t a, std::size_t b) {
        return (a + b) % n;
    });
    structure.fn_tables["u"].resize(n);
    for (std::size_t a = 0; a < n; ++a) structure.fn_tables["u"][a] = (n - a) % n;
    structure.fn_tables["zero"] = {0};
    fill_relations(structure, mode == FixtureMode::algebraic ? diagonal_relation(n)
                                                             : standard_chain(n));
    return make_model(std::move(theory), std::move(structure));
}

Model build_truncated_semiring_model(std::size_t k) {
    if (k == 0) throw Error(errc::model_invalid, "truncated semiring requires k >= 1");
    const std::size_t n = k + 1;
    Theory theory = standard_theory(StandardKind::rig, EmbodimentMode::subalgebraic);
    FiniteStructure structure;
    structure.carrier.elements = number_labels(n);
    structure.signature = theory.signature;
    structure.fn_tables["plus"] = binary_table(n, [k](std::size_t a, std::size_t b) {
        return std::min(a + b, k);
    });
    structure.fn_tables["star"] = binary_table(n, [k](std::size_t a, std::size_t b) {
        return std::min(a * b, k);
    });
    structure.fn_tables["zero"] = {0};
    structure.fn_tables["one"] = {1};
    fill_relations(structure, standard_chain(n));
    return make_model(std::move(theory), std::move(structure));
}

Model build_modular_ring_model(std::size_t n) {
    if (n == 0) throw Error(errc::model_invalid, "modular ring requires n >= 1");
    Theory theory = standard_theory(StandardKind::ring, EmbodimentMode::subalgebraic);
    FiniteStructure structure;
    structure.carrier.elements = number_labels(n);
    structure.signature = theory.signature;
    structure.fn_tables["plus"] = binary_table(n, [n](std::size_t a, std::size_t b) {
        return (a + b) % n;
    });
    structure.fn_tables["star"] = binary_table(n, [n](std::size_t a, std::size_t b) {
        return (a * b) % n;
    });
    structure.fn_tables["u"].resize(n);
    for (std::size_t a = 0; a < n; ++a) structure.fn_tables["u"][a] = (n - a) % n;
    structure.fn_tables["zero"] = {0};
    structure.fn_tables["one"] = {1 % n};
    fill_relations(structure, diagonal_relation(n));
    return make_model(std::move(theory), std::move(structure));
}

Model build_workaround_target(StandardKind kind, std::size_t k) {
    if (k == 0) throw Error(errc::model_invalid, "workaround target requires k >= 1");
    const std::size_t n = k + 1;
    const Signature sig = standard_theory(kind, EmbodimentMode::subalgebraic).signature;
    Theory theory = embodiment(make_theory(kDefaultVariables, sig, {}),
                               EmbodimentMode::subalgebraic);
    FiniteStructure structure;
    structure.carrier.elements = number_labels(n);
    structure.signature = theory.signature;
    for (const Symbol& fn : sig.functions) {
        if (fn.name == "plus")
            structure.fn_tables["plus"] = binary_table(n, [k](std::size_t a, std::size_t b) {
                return std::min(a + b, k);
            });
        else if (fn.name == "star")
            structure.fn_tables["star"] = binary_table(n, [k](std::size_t a, std::size_t b) {
                return std::min(a * b, k);
            });
        else if (fn.name == "u") {
            structure.fn_tables["u"].resize(n);
            for (std::size_t a = 0; a < n; ++a) structure.fn_tables["u"][a] = a;
        } else if (fn.name == "zero")
            structure.fn_tables["zero"] = {0};
        else if (fn.name == "one")
            structure.fn_tables["one"] = {1};
    }
    fill_relations(structure, standard_chain(n));
    return make_model(std::move(theory), std::move(structure));
}

namespace {

ExampleReport run_e1() {
    ExampleReport report;
    report.name = "E1";
    report.summary = "semigroup subnorms Z2 -> N2: characterized by subadditivity";
    const Theory t_sgrp = standard_theory(StandardKind::sgrp, EmbodimentMode::subalgebraic);
    const Model source = restrict_model(build_cyclic_group_model(2, FixtureMode::algebraic),
                                        t_sgrp);
    const Model target = restrict_model(build_truncated_semiring_model(2), t_sgrp);
    const SignatureHom alpha = identity_hom(t_sgrp.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(source, target, alpha);
    report.enumerated = subnorms.size();
    assert_on(report, "every enumerated prenorm is a subnorm",
              std::all_of(subnorms.begin(), subnorms.end(),
                          [](const Prenorm& p) { return p.report.is_subnorm; }));

    bool equivalence = true;
    for (const CarrierMap& phi : all_maps(2, 3)) {
        bool subadditive = true;
        for (std::size_t a = 0; a < 2 && subadditive; ++a)
            for (std::size_t b = 0; b < 2 && subadditive; ++b) {
                const std::size_t lhs = phi[source.structure.apply("plus", {a, b})];
                const std::size_t rhs = target.structure.apply("plus", {phi[a], phi[b]});
                subadditive = target.structure.related("leq_plus", {lhs, rhs});
            }
        if (check_prenorm(source, target, alpha, phi).passed != subadditive) equivalence = false;
    }
    assert_on(report, "prenorm check coincides with the subadditivity inequality", equivalence);
    return report;
}

ExampleReport run_e2() {
    ExampleReport report;
    report.name = "E2";
    report.summary = "monoid subnorms Z2 -> N2: three subnorms, 0 forced to 0, "
                     "definiteness labels";
    const Theory t_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic);
    const Model source = restrict_model(build_cyclic_group_model(2, FixtureMode::algebraic),
                                        t_mon);
    const Model target = restrict_model(build_truncated_semiring_model(2), t_mon);
    const SignatureHom alpha = identity_hom(t_mon.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(source, target, alpha);
    report.enumerated = subnorms.size();
    assert_on(report, "exactly 3 subnorms", subnorms.size() == 3,
              "found " + std::to_string(subnorms.size()));
    assert_on(report, "every subnorm maps 0 to 0",
              std::all_of(subnorms.begin(), subnorms.end(),
                          [](const Prenorm& p) { return p.phi[0] == 0; }));

    bool labels_ok = true;
    for (const Prenorm& p : subnorms) {
        const DefinitenessClass cls = classify_definiteness(p, "zero");
        const bool constant_phi = p.phi[0] == p.phi[1];
        if (constant_phi)
            labels_ok = labels_ok && cls.trivial && cls.upward_semidefinite &&
                        !cls.upward_definite;
        else
            labels_ok = labels_ok && cls.upward_definite && !cls.trivial;
    }
    assert_on(report, "nonconstant subnorms upward-definite, constant one trivial and "
                      "upward-semidefinite",
              labels_ok);
    return report;
}

ExampleReport run_e3() {
    ExampleReport report;
    report.name = "E3";
    report.summary = "group subnorms Z3 -> saturating target with u = identity: "
                     "symmetry is forced";
    const Model source = build_cyclic_group_model(3, FixtureMode::algebraic);
    const Model target = build_workaround_target(StandardKind::grp, 2);
    const SignatureHom alpha = identity_hom(source.structure.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(source, target, alpha);
    report.enumerated = subnorms.size();
    assert_on(report, "at least one subnorm exists", !subnorms.empty());

    bool symmetric = true, zero_forced = true;
    for (const Prenorm& p : subnorms) {
        for (std::size_t a = 0; a < 3; ++a)
            if (p.phi[source.structure.apply("u", {a})] != p.phi[a]) symmetric = false;
        if (p.phi[0] != 0) zero_forced = false;
    }
    assert_on(report, "every subnorm is symmetric: |u(a)| = |a|", symmetric);
    assert_on(report, "every subnorm maps 0 to 0", zero_forced);
    return report;
}

ExampleReport run_e4() {
    ExampleReport report;
    report.name = "E4";
    report.summary = "semiring subnorms Z2 -> N2: monoid restriction plus "
                     "submultiplicativity";
    const Theory t_rg = standard_theory(StandardKind::rg, EmbodimentMode::subalgebraic);
    const Theory t_mon = standard_theory(StandardKind::mon, EmbodimentMode::subalgebraic);
    const Model source = restrict_model(build_modular_ring_model(2), t_rg);
    const Model target = restrict_model(build_truncated_semiring_model(2), t_rg);
    const Model source_mon = restrict_model(source, t_mon);
    const Model target_mon = restrict_model(target, t_mon);
    const SignatureHom alpha = identity_hom(t_rg.signature);
    const SignatureHom alpha_mon = identity_hom(t_mon.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(source, target, alpha);
    report.enumerated = subnorms.size();

    bool equivalence = true;
    for (const CarrierMap& phi : all_maps(2, 3)) {
        bool submultiplicative = true;
        for (std::size_t a = 0; a < 2 && submultiplicative; ++a)
            for (std::size_t b = 0; b < 2 && submultiplicative; ++b) {
                const std::size_t lhs = phi[source.structure.apply("star", {a, b})];
                const std::size_t rhs = target.structure.apply("star", {phi[a], phi[b]});
                submultiplicative = target.structure.related("leq_star", {lhs, rhs});
            }
        const bool mon_part = check_prenorm(source_mon, target_mon, alpha_mon, phi).passed;
        if (check_prenorm(source, target, alpha, phi).passed !=
            (mon_part && submultiplicative))
            equivalence = false;
    }
    assert_on(report,
              "semiring subnorm iff monoid restriction plus submultiplicativity",
              equivalence);
    return report;
}

ExampleReport run_e5() {
    ExampleReport report;
    report.name = "E5";
    report.summary = "rng subnorms: pass exactly when the group and semiring "
                     "restrictions both pass";
    const Theory t_rng = standard_theory(StandardKind::rng, EmbodimentMode::subalgebraic);
    const Theory t_grp = standard_theory(StandardKind::grp, EmbodimentMode::subalgebraic);
    const Theory t_rg = standard_theory(StandardKind::rg, EmbodimentMode::subalgebraic);
    const Model source = restrict_model(build_modular_ring_model(2), t_rng);
    const Model target = build_workaround_target(StandardKind::rng, 2);

    const Model source_grp = restrict_model(source, t_grp);
    const Model source_rg = restrict_model(source, t_rg);
    const Model target_grp = restrict_model(target, subtheory(target.theory, t_grp.signature));
    const Model target_rg = restrict_model(target, subtheory(target.theory, t_rg.signature));

    const SignatureHom alpha = identity_hom(t_rng.signature);
    const SignatureHom alpha_grp = identity_hom(t_grp.signature);
    const SignatureHom alpha_rg = identity_hom(t_rg.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(source, target, alpha);
    report.enumerated = subnorms.size();

    bool equivalence = true;
    for (const CarrierMap& phi : all_maps(2, 3)) {
        const bool full = check_prenorm(source, target, alpha, phi).passed;
        const bool grp_part = check_prenorm(source_grp, target_grp, alpha_grp, phi).passed;
        const bool rg_part = check_prenorm(source_rg, target_rg, alpha_rg, phi).passed;
        if (full != (grp_part && rg_part)) equivalence = false;
    }
    assert_on(report, "rng subnorm iff group restriction and semiring restriction",
              equivalence);
    return report;
}

ExampleReport run_e6() {
    ExampleReport report;
    report.name = "E6";
    report.summary = "unital-semiring subnorms N2 -> N2: a unit-valued |1| must be 1";
    const Model n2 = build_truncated_semiring_model(2);
    const SignatureHom alpha = identity_hom(n2.structure.signature);
    const std::size_t size = n2.structure.carrier.size();

    bool monotone = true;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            for (std::size_t c = 0; c < size; ++c)
                if (n2.structure.related("leq_star", {a, b})) {
                    if (!n2.structure.related("leq_star",
                                              {n2.structure.apply("star", {a, c}),
                                               n2.structure.apply("star", {b, c})}) ||
                        !n2.structure.related("leq_star",
                                              {n2.structure.apply("star", {c, a}),
                                               n2.structure.apply("star", {c, b})}))
                        monotone = false;
                }
    assert_on(report, "multiplication is monotone in both arguments", monotone);

    std::vector<std::size_t> units;
    const std::size_t one = n2.structure.constant("one");
    for (std::size_t e = 0; e < size; ++e)
        for (std::size_t b = 0; b < size; ++b)
            if (n2.structure.apply("star", {e, b}) == one &&
                n2.structure.apply("star", {b, e}) == one) {
                units.push_back(e);
                break;
            }
    assert_on(report, "units of the multiplicative monoid are exactly {1}",
              units == std::vector<std::size_t>{one});

    const std::vector<Prenorm> subnorms = enumerate_prenorms(n2, n2, alpha);
    report.enumerated = subnorms.size();
    bool forced = true;
    for (const Prenorm& p : subnorms)
        if (std::find(units.begin(), units.end(), p.phi[one]) != units.end() &&
            p.phi[one] != one)
            forced = false;
    assert_on(report, "every subnorm with |1| a unit has |1| = 1", forced);
    return report;
}

ExampleReport run_e7() {
    ExampleReport report;
    report.name = "E7";
    report.summary = "unital-ring subnorms: pass exactly when the unital-semiring "
                     "and group restrictions both pass";
    const Theory t_rig = standard_theory(StandardKind::rig, EmbodimentMode::subalgebraic);
    const Theory t_grp = standard_theory(StandardKind::grp, EmbodimentMode::subalgebraic);
    const Model source = build_modular_ring_model(2);
    const Model target = build_workaround_target(StandardKind::ring, 2);

    const Model source_rig = restrict_model(source, t_rig);
    const Model source_grp = restrict_model(source, t_grp);
    const Model target_rig = restrict_model(target, subtheory(target.theory, t_rig.signature));
    const Model target_grp = restrict_model(target, subtheory(target.theory, t_grp.signature));

    const SignatureHom alpha = identity_hom(source.structure.signature);
    const SignatureHom alpha_rig = identity_hom(t_rig.signature);
    const SignatureHom alpha_grp = identity_hom(t_grp.signature);

    const std::vector<Prenorm> subnorms = enumerate_prenorms(source, target, alpha);
    report.enumerated = subnorms.size();

    bool equivalence = true;
    for (const CarrierMap& phi : all_maps(2, 3)) {
        const bool full = check_prenorm(source, target, alpha, phi).passed;
        const bool rig_part = check_prenorm(source_rig, target_rig, alpha_rig, phi).passed;
        const bool grp_part = check_prenorm(source_grp, target_grp, alpha_grp, phi).passed;
        if (full != (rig_part && grp_part)) equivalence = false;
    }
    assert_on(report, "ring subnorm iff unital-semiring restriction and group restriction",
              equivalence);
    return report;
}

} // namespace

bool ExampleReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const ExampleAssertion& a) { return a.passed; });
}

std::vector<std::string> worked_example_names() {
    return {"E1", "E2", "E3", "E4", "E5", "E6", "E7"};
}

ExampleReport run_worked_example(const std::string& name) {
    if (name == "E1") return run_e1();
    if (name == "E2") return run_e2();
    if (name == "E3") return run_e3();
    if (name == "E4") return run_e4();
    if (name == "E5") return run_e5();
    if (name == "E6") return run_e6();
    if (name == "E7") return run_e7();
    throw Error(errc::usage, "unknown worked example '" + name + "'");
}

} // namespace normkit
