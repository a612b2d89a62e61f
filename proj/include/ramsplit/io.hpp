#pragma once

// JSON schemas "ramsplit-model/1", "ramsplit-alpha/1", "ramsplit-result/1"
// and DOT export. Objects are keyed by id and dumped with sorted keys, so
// output does not depend on input key order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ramsplit/brauer.hpp"
#include "ramsplit/engine.hpp"
#include "ramsplit/model.hpp"

namespace ramsplit::io {

using Json = nlohmann::json;

inline constexpr const char* kModelSchema = "ramsplit-model/1";
inline constexpr const char* kAlphaSchema = "ramsplit-alpha/1";
inline constexpr const char* kResultSchema = "ramsplit-result/1";

/// Throws SchemaError on malformed text.
Json parse(std::string_view text);
/// Two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);

Json to_json(const CharClass& c);
CharClass char_class_from_json(const Json& j);

Json to_json(const Model& m);
Model model_from_json(const Json& j);

Json to_json(const RamificationData& rd);
RamificationData alpha_from_json(const Json& j);

Json to_json(const LocalWitt& w);
LocalWitt witt_from_json(PrimeModulus m, const Json& j);

Json to_json(const BlowupTrace& t);
BlowupTrace trace_from_json(PrimeModulus m, const Json& j);

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const SplittingCharacter& psi);
SplittingCharacter psi_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

Json to_json(const SplitResult& r);
SplitResult result_from_json(const Json& j);

/// {"model": ..., "alpha": ...}
Json bundle(const Model& m, const RamificationData& rd);

struct Inputs {
  std::optional<Model> model;
  std::optional<RamificationData> alpha;
};

/// Each text is a model, an alpha, or a bundle of both, recognised by its
/// "schema" field. Throws SchemaError.
Inputs read_inputs(const std::vector<std::string>& texts);

/// Decorated dual graph. Ramified components are doubled boxes labelled with
/// their sign and kind; edges are coloured by point type.
std::string export_dot(const Model& m, const RamificationData* rd = nullptr);

}  // namespace ramsplit::io
