#pragma once

#include "normkit/category.hpp"
#include "normkit/dsl.hpp"
#include "normkit/examples.hpp"

#include <json.hpp>

namespace normkit {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Signature& sig);
ordered_json to_json(const Theory& theory);
ordered_json to_json(const FiniteStructure& structure);
ordered_json to_json(const SatisfactionReport& report);
ordered_json to_json(const PrenormReport& report);
ordered_json to_json(const Prenorm& prenorm);
ordered_json to_json(const DefinitenessClass& cls);
ordered_json to_json(const LawReport& report);
ordered_json to_json(const CategoryPresentation& category);
ordered_json to_json(const ShortMorphismReport& report);
ordered_json to_json(const ExampleReport& report);

/// Canonical AST dump of a parsed document (CLI --emit-ast).
ordered_json to_json(const TheoryDocument& document);

} // namespace normkit
