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

#include "impactscreen/estimator.hpp"

#include <fmt/format.h>

#include "impactscreen/display.hpp"

namespace impactscreen {
namespace {

Provenance to_ledger(FieldProvenance p) {
  switch (p) {
    case FieldProvenance::kExplicit: return Provenance::kUser;
    case FieldProvenance::kInferred: return Provenance::kDerived;
    case FieldProvenance::kDefault: return Provenance::kDefault;
  }
  return Provenance::kDefault;
}

FieldProvenance provenance_for(const EstimateRequest& request, std::string_view f, bool value_given) {
  const auto it = request.field_provenance.find(f);
  if (it != request.field_provenance.end()) return it->second;
  return value_given ? FieldProvenance::kExplicit : FieldProvenance::kDefault;
}

}  // namespace

EstimateRequest request_from_scenario(const Scenario& scenario) {
  EstimateRequest r;
  r.model = scenario.model_id;
  r.input_tokens = scenario.token_load.input_tokens();
  r.output_tokens = scenario.token_load.output_tokens();
  r.requests_per_month = scenario.requests_per_month;
  r.country = scenario.country_code;
  r.request_type = scenario.request_type;
  r.field_provenance = scenario.field_provenance;
  return r;
}

EstimateResult run_estimate(const Catalog& catalog, const EstimateRequest& request) {
  const LookupResult lookup = lookup_model(catalog, request.model);
  if (lookup.status == LookupStatus::kNotFound) {
    throw EstimateError(EstimateError::Code::kUnknownModel,
                        fmt::format("unknown model '{}'", request.model), lookup.candidates);
  }
  if (lookup.status == LookupStatus::kAmbiguous) {
    throw EstimateError(EstimateError::Code::kAmbiguousModel,
                        fmt::format("model '{}' is ambiguous", request.model), lookup.candidates);
  }
  const ModelProfile& profile = *lookup.profile;

  EstimateResult result;
  result.model = &profile;
  Scenario& scenario = result.scenario;
  scenario.model_id = profile.id;
  scenario.request_type = request.request_type;
  scenario.field_provenance[std::string(field::kModel)] =
      provenance_for(request, field::kModel, true);
  scenario.field_provenance[std::string(field::kRequestType)] =
      provenance_for(request, field::kRequestType, request.request_type != RequestType::kGeneric);

  // Token load.
  const Lexicon::RequestTypeEntry& defaults = catalog.lexicon.entry_for(request.request_type);
  const bool any_tokens = request.input_tokens || request.output_tokens;
  InputProvenance inputs;
  const FieldProvenance token_prov = provenance_for(
      request, field::kTokenLoad, any_tokens);
  inputs.load = to_ledger(token_prov);
  if (token_prov == FieldProvenance::kDefault) {
    inputs.load_note = defaults.fitted
                           ? fmt::format("{} request-type default, fitted to a published annual result",
                                         to_string(defaults.type))
                           : fmt::format("{} request-type default", to_string(defaults.type));
  } else if (!(request.input_tokens && request.output_tokens)) {
    inputs.load_note = "partially given; missing side from the request-type default";
  }
  try {
    scenario.token_load = TokenLoad(request.input_tokens.value_or(defaults.default_input_tokens),
                                    request.output_tokens.value_or(defaults.default_output_tokens));
  } catch (const InvalidArgument& e) {
    throw EstimateError(EstimateError::Code::kInvalidTokens, e.what());
  }
  scenario.field_provenance[std::string(field::kTokenLoad)] = token_prov;

  // Country.
  const CountryMix* country = nullptr;
  if (request.country) {
    country = catalog.find_country(*request.country);
    if (!country) {
      std::vector<std::string> codes;
      for (const auto& c : catalog.countries) codes.push_back(c.country_code);
      throw EstimateError(EstimateError::Code::kUnknownCountry,
                          fmt::format("no carbon-intensity mix for country '{}'", *request.country), codes);
    }
    inputs.country = to_ledger(provenance_for(request, field::kCountry, true));
  } else {
    country = catalog.find_country(profile.provider_country);
    if (!country) {
      throw EstimateError(EstimateError::Code::kUnknownCountry,
                          fmt::format("no carbon-intensity mix for provider country '{}'", profile.provider_country));
    }
    inputs.country = Provenance::kDefault;
    inputs.country_note = "provider-country proxy";
  }
  scenario.country_code = country->country_code;
  scenario.field_provenance[std::string(field::kCountry)] =
      request.country ? provenance_for(request, field::kCountry, true) : FieldProvenance::kDefault;

  if (request.requests_per_month && !(*request.requests_per_month >= 1.0)) {
    throw EstimateError(EstimateError::Code::kInvalidVolume,
                        fmt::format("requests per month must be >= 1 (got {})", *request.requests_per_month));
  }
  scenario.requests_per_month = request.requests_per_month;
  scenario.field_provenance[std::string(field::kRequestsPerMonth)] =
      provenance_for(request, field::kRequestsPerMonth, request.requests_per_month.has_value());

  result.inference = estimate_inference(profile, scenario.token_load, *country, catalog.anchors,
                                        catalog.factors, inputs);
  AssumptionLedger& ledger = result.inference.assumptions;
  ledger.push_back({"request_type", std::string(to_string(scenario.request_type)),
                    to_ledger(scenario.provenance_of(field::kRequestType)), ""});
  if (scenario.requests_per_month) {
    ledger.push_back({"requests_per_month", display::count(*scenario.requests_per_month),
                      to_ledger(scenario.provenance_of(field::kRequestsPerMonth)),
                      "annualized as 12 x monthly volume"});
    result.annual = annualize(result.inference, *scenario.requests_per_month);
  }
  return result;
}

}  // namespace impactscreen
