// Copyright 2026 The impactscreen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPACTSCREEN_SCENARIO_PARSER_HPP_
#define IMPACTSCREEN_SCENARIO_PARSER_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "impactscreen/catalog.hpp"
#include "impactscreen/inference.hpp"

namespace impactscreen {

enum class FieldProvenance { kExplicit, kInferred, kDefault };

std::string_view to_string(FieldProvenance p);
std::optional<FieldProvenance> field_provenance_from_string(std::string_view s);

/// Field names used as keys of Scenario::field_provenance.
namespace field {
inline constexpr std::string_view kModel = "model";
inline constexpr std::string_view kRequestType = "request_type";
inline constexpr std::string_view kTokenLoad = "token_load";
inline constexpr std::string_view kRequestsPerMonth = "requests_per_month";
inline constexpr std::string_view kCountry = "country";
inline constexpr std::string_view kAll[] = {kModel, kRequestType, kTokenLoad,
                                            kRequestsPerMonth, kCountry};
}  // namespace field

/// A usage scenario extracted from a feature description.
struct Scenario {
  std::string model_id;
  RequestType request_type = RequestType::kGeneric;
  TokenLoad token_load{1000.0, 550.0};
  /// Absent when the description names no usage volume.
  std::optional<double> requests_per_month;
  /// Absent means the estimator falls back to the provider country.
  std::optional<std::string> country_code;
  std::map<std::string, FieldProvenance, std::less<>> field_provenance;

  FieldProvenance provenance_of(std::string_view f) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Diagnostic {
  enum class Code {
    kEmptyDescription,
    kNoModel,
    kAmbiguousModel,
    kConflictingVolume,
    kNonPositiveVolume,
    kAmbiguousNumber,
    kConflictingTokens,
    kConflictingCountry,
  };
  Code code;
  std::string message;
  std::vector<std::string> suggestions;
};

std::string_view to_string(Diagnostic::Code c);

struct ParseResult {
  std::optional<Scenario> scenario;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return scenario.has_value(); }
};

/// Rule-based extraction: model mention, period-bound volume, request type
/// keywords, explicit token counts, and country mentions. Deterministic.
ParseResult parse_scenario(std::string_view description, const Catalog& catalog);

/// One-line summary with every field value and its provenance.
std::string render_scenario(const Scenario& scenario);

}  // namespace impactscreen

#endif  // IMPACTSCREEN_SCENARIO_PARSER_HPP_
