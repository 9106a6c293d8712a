#pragma once

#include "normkit/prenorm.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace normkit {

/// Cyclic group Z_n as a model of the subalgebraic group theory. In algebraic
/// mode every order relation is the diagonal; in subalgebraic mode every order
/// relation is the standard chain 0 < 1 < ... < n-1.
enum class FixtureMode { algebraic, subalgebraic };

Model build_cyclic_group_model(std::size_t n, FixtureMode mode);

/// Truncated saturating semiring {0..k}: a (+) b = min(a+b, k),
/// a (*) b = min(a*b, k), constants 0 and 1, every order relation the standard
/// total order. A model of the subalgebraic unital-semiring theory.
Model build_truncated_semiring_model(std::size_t k);

/// Ring of integers mod n with diagonal order relations, as a model of the
/// subalgebraic unital-ring theory.
Model build_modular_ring_model(std::size_t n);

/// Saturating target over the signature of the given standard kind, with the
/// unary symbol (when present) interpreted as the identity map and the theory
/// consisting of the order axioms only. Used where a genuine model of the
/// source's algebra axioms is unavailable on a chain.
Model build_workaround_target(StandardKind kind, std::size_t k);

struct ExampleAssertion {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct ExampleReport {
    std::string name;
    std::string summary;
    std::size_t enumerated = 0; // subnorms found by brute force
    std::vector<ExampleAssertion> assertions;

    bool passed() const;
};

/// Runs one of the worked examples E1..E7 and asserts its characterization
/// and derived facts over the canonical fixtures.
ExampleReport run_worked_example(const std::string& name);

std::vector<std::string> worked_example_names();

} // namespace normkit
