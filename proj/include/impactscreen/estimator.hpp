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

#ifndef IMPACTSCREEN_ESTIMATOR_HPP_
#define IMPACTSCREEN_ESTIMATOR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "impactscreen/catalog.hpp"
#include "impactscreen/inference.hpp"
#include "impactscreen/reporter.hpp"
#include "impactscreen/scenario_parser.hpp"

namespace impactscreen {

/// Resolves a scenario against the catalog: fills defaults for the load and
/// country, runs the inference proxy and annualizes when a volume is known.
struct EstimateRequest {
  std::string model;
  std::optional<double> input_tokens;
  std::optional<double> output_tokens;
  std::optional<double> requests_per_month;
  std::optional<std::string> country;
  RequestType request_type = RequestType::kGeneric;
  /// Per-field provenance carried over from the parser; absent fields that
  /// are set count as user input.
  std::map<std::string, FieldProvenance, std::less<>> field_provenance;
};

EstimateRequest request_from_scenario(const Scenario& scenario);

struct EstimateResult {
  const ModelProfile* model = nullptr;
  Scenario scenario;
  InferenceEstimate inference;
  std::optional<AnnualizedEstimate> annual;
};

class EstimateError : public std::runtime_error {
 public:
  enum class Code { kUnknownModel, kAmbiguousModel, kUnknownCountry, kInvalidTokens, kInvalidVolume };

  EstimateError(Code code, const std::string& message, std::vector<std::string> suggestions = {})
      : std::runtime_error(message), code_(code), suggestions_(std::move(suggestions)) {}

  Code code() const { return code_; }
  const std::vector<std::string>& suggestions() const { return suggestions_; }

 private:
  Code code_;
  std::vector<std::string> suggestions_;
};

EstimateResult run_estimate(const Catalog& catalog, const EstimateRequest& request);

}  // namespace impactscreen

#endif  // IMPACTSCREEN_ESTIMATOR_HPP_
