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

#include "impactscreen/training.hpp"

#include <cmath>

#include <fmt/format.h>

namespace impactscreen {
namespace {

constexpr double kKwhPerGwh = 1e6;
constexpr double kGramsPerTonne = 1e6;

double tonnes(double gwh, double intensity_g_per_kwh) {
  return gwh * kKwhPerGwh * intensity_g_per_kwh / kGramsPerTonne;
}

}  // namespace

std::string_view to_string(TokenSource s) {
  return s == TokenSource::kCatalog ? "catalog" : "prior_20x";
}

TrainingTokens training_tokens(const ModelProfile& profile) {
  if (profile.training_tokens_b) return {*profile.training_tokens_b, TokenSource::kCatalog};
  return {kTokensPerParameterPrior * profile.raw_active_params_b, TokenSource::kPrior20x};
}

double training_factor(const ModelProfile& profile, const FactorTable& factors, ScreeningCase c) {
  if (profile.factor_overrides && profile.factor_overrides->training) {
    return (*profile.factor_overrides->training)[c];
  }
  return factors.at(FactorKind::kReg, to_string(profile.training_regime))[c] *
         factors.at(FactorKind::kArchTr, to_string(profile.arch_note))[c] *
         factors.at(FactorKind::kArchTr, to_string(profile.modality))[c] *
         factors.at(FactorKind::kHw, to_string(profile.hardware_class))[c];
}

double training_power_law(const TrainingAnchor& anchor, double params_b, double tokens_b,
                          ScreeningCase c) {
  return anchor.anchor_energy_gwh * std::pow(params_b / anchor.anchor_params_b, anchor.alpha[c]) *
         std::pow(tokens_b / anchor.anchor_tokens_b, anchor.beta[c]);
}

Triple estimate_training_energy(const ModelProfile& profile, const TrainingAnchor& anchor,
                                const FactorTable& factors) {
  const TrainingTokens tokens = training_tokens(profile);
  Triple out;
  for (auto c : kAllCases) {
    out[c] = training_power_law(anchor, profile.raw_active_params_b, tokens.billions, c) *
             training_factor(profile, factors, c);
  }
  return out;
}

TrainingEstimate estimate_training(const ModelProfile& profile, const TrainingAnchor& anchor,
                                   const FactorTable& factors, const CountryMix* country) {
  TrainingEstimate est;
  est.model_id = profile.id;
  const TrainingTokens tokens = training_tokens(profile);
  est.tokens_used_b = tokens.billions;
  est.token_source = tokens.source;
  est.energy_gwh = ScreeningBand::from_cases(estimate_training_energy(profile, anchor, factors), Unit::kGwh);

  if (country) {
    const double ci = country->carbon_intensity_g_per_kwh;
    ScreeningBand carbon;
    carbon.unit = Unit::kTonnes;
    carbon.low = tonnes(est.energy_gwh.low, ci);
    carbon.central = tonnes(est.energy_gwh.central, ci);
    carbon.high = tonnes(est.energy_gwh.high, ci);
    for (auto c : kAllCases) carbon.scenario_values[c] = tonnes(est.energy_gwh.scenario_values[c], ci);
    est.carbon_t = carbon;
    est.country_code = country->country_code;
  }

  const bool fitted = profile.factor_overrides && profile.factor_overrides->training;
  AssumptionLedger& ledger = est.assumptions;
  ledger.push_back({"model", profile.id, Provenance::kCatalog, profile.display_name});
  ledger.push_back({"params", fmt::format("{:g} B", profile.raw_active_params_b), Provenance::kCatalog,
                    profile.assumed ? "assumed screening placeholder; not a disclosed value" : ""});
  ledger.push_back({"training_tokens", fmt::format("{:g} B", tokens.billions),
                    tokens.source == TokenSource::kCatalog ? Provenance::kCatalog : Provenance::kDefault,
                    tokens.source == TokenSource::kCatalog ? "published token count"
                                                           : "prior of 20 training tokens per parameter"});
  ledger.push_back({"training_regime", std::string(to_string(profile.training_regime)), Provenance::kCatalog,
                    ""});
  ledger.push_back(
      {"training_factors",
       fmt::format("{:.4g} / {:.4g} / {:.4g} (low/central/high case)",
                   training_factor(profile, factors, ScreeningCase::kLow),
                   training_factor(profile, factors, ScreeningCase::kCentral),
                   training_factor(profile, factors, ScreeningCase::kHigh)),
       Provenance::kDerived,
       fitted ? "fitted factor override back-solved from published screening values"
              : fmt::format("factor table: reg={}, arch_tr={}+{}, hw={}", to_string(profile.training_regime),
                            to_string(profile.arch_note), to_string(profile.modality),
                            to_string(profile.hardware_class))});
  ledger.push_back({"training_anchor",
                    fmt::format("{:g} GWh at {:g} B params, {:g} B tokens", anchor.anchor_energy_gwh,
                                anchor.anchor_params_b, anchor.anchor_tokens_b),
                    Provenance::kCatalog, anchor.source_note});
  if (country) {
    ledger.push_back({"country", country->country_code, Provenance::kDefault,
                      "provider-country proxy for the training site"});
  }
  return est;
}

}  // namespace impactscreen
