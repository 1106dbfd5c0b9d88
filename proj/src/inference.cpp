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

#include "impactscreen/inference.hpp"

#include <cmath>

#include <fmt/format.h>

#include "impactscreen/display.hpp"

namespace impactscreen {

TokenLoad::TokenLoad(double input_tokens, double output_tokens)
    : input_(input_tokens), output_(output_tokens) {
  if (!(input_tokens >= 0.0) || !(output_tokens >= 0.0) || !std::isfinite(input_tokens) ||
      !std::isfinite(output_tokens)) {
    throw InvalidArgument(fmt::format("token counts must be finite and non-negative (got {}, {})",
                                      input_tokens, output_tokens));
  }
  if (input_tokens == 0.0 && output_tokens == 0.0) {
    throw InvalidArgument("token load (0, 0) describes no request");
  }
}

TokenLoad TokenLoad::standardized(const AnchorConstants& anchors) {
  return TokenLoad(anchors.ref_input_tokens, anchors.ref_output_tokens);
}

double weighted_volume(const TokenLoad& load, const AnchorConstants& anchors) {
  return load.input_tokens() + anchors.output_token_weight * load.output_tokens();
}

double effective_params(const ModelProfile& profile, const FactorTable& factors, ScreeningCase c) {
  if (profile.factor_overrides && profile.factor_overrides->inference) {
    return profile.raw_active_params_b * (*profile.factor_overrides->inference)[c];
  }
  return profile.raw_active_params_b * factors.at(FactorKind::kCtx, to_string(profile.context_class))[c] *
         factors.at(FactorKind::kSrv, to_string(profile.serving_mode))[c] *
         factors.at(FactorKind::kMod, to_string(profile.modality))[c] *
         factors.at(FactorKind::kArch, to_string(profile.arch_note))[c];
}

Triple effective_params(const ModelProfile& profile, const FactorTable& factors) {
  Triple out;
  for (auto c : kAllCases) out[c] = effective_params(profile, factors, c);
  return out;
}

double energy_per_request(const AnchorConstants& anchors, double effective_params_b, double volume,
                          ScreeningCase c) {
  return anchors.anchor_energy_wh *
         std::pow(effective_params_b / anchors.anchor_active_params_b, anchors.alpha[c]) *
         std::pow(volume / anchors.ref_volume(), anchors.beta[c]);
}

Triple estimate_energy(const ModelProfile& profile, const TokenLoad& load,
                       const AnchorConstants& anchors, const FactorTable& factors) {
  const double volume = weighted_volume(load, anchors);
  Triple out;
  for (auto c : kAllCases) {
    out[c] = energy_per_request(anchors, effective_params(profile, factors, c), volume, c);
  }
  return out;
}

InferenceEstimate estimate_inference(const ModelProfile& profile, const TokenLoad& load,
                                     const CountryMix& country, const AnchorConstants& anchors,
                                     const FactorTable& factors, const InputProvenance& provenance) {
  InferenceEstimate est;
  est.model_id = profile.id;
  est.load = load;
  est.volume = weighted_volume(load, anchors);
  est.effective_params_b = effective_params(profile, factors);

  Triple energy;
  for (auto c : kAllCases) {
    energy[c] = energy_per_request(anchors, est.effective_params_b[c], est.volume, c);
  }
  est.energy_wh = ScreeningBand::from_cases(energy, Unit::kWhPerRequest);

  // Carbon is computed from the energy band value by value so the coupling
  // holds exactly for low, central and high.
  const double ci = country.carbon_intensity_g_per_kwh;
  ScreeningBand& carbon = est.carbon_g;
  carbon.unit = Unit::kGramsPerRequest;
  carbon.low = carbon_grams(est.energy_wh.low, ci);
  carbon.central = carbon_grams(est.energy_wh.central, ci);
  carbon.high = carbon_grams(est.energy_wh.high, ci);
  for (auto c : kAllCases) carbon.scenario_values[c] = carbon_grams(energy[c], ci);
  est.country_code = country.country_code;
  est.carbon_intensity_g_per_kwh = ci;

  const bool fitted = profile.factor_overrides && profile.factor_overrides->inference;
  AssumptionLedger& ledger = est.assumptions;
  ledger.push_back({"model", profile.id, Provenance::kCatalog, profile.display_name});
  ledger.push_back({"active_params", fmt::format("{:g} B", profile.raw_active_params_b), Provenance::kCatalog,
                    profile.assumed ? "assumed screening placeholder; not a disclosed value" : ""});
  ledger.push_back(
      {"effective_params",
       fmt::format("{:.4g} / {:.4g} / {:.4g} B (low/central/high case)", est.effective_params_b.low(),
                   est.effective_params_b.central(), est.effective_params_b.high()),
       Provenance::kDerived,
       fitted ? "fitted factor override back-solved from published screening values"
              : fmt::format("factor table: ctx={}, srv={}, mod={}, arch={}", to_string(profile.context_class),
                            to_string(profile.serving_mode), to_string(profile.modality),
                            to_string(profile.arch_note))});
  ledger.push_back({"token_load",
                    fmt::format("{} in / {} out", display::count(load.input_tokens()),
                                display::count(load.output_tokens())),
                    provenance.load, provenance.load_note});
  ledger.push_back({"weighted_volume", fmt::format("{:g} tokens", est.volume), Provenance::kDerived,
                    fmt::format("input + {:g} x output", anchors.output_token_weight)});
  ledger.push_back({"country", country.country_code, provenance.country, provenance.country_note});
  ledger.push_back({"carbon_intensity", fmt::format("{:g} gCO2e/kWh", ci), Provenance::kCatalog,
                    country.source_note});
  ledger.push_back({"anchor",
                    fmt::format("{:g} Wh/prompt at {:g} B active params, weighted volume {:g}",
                                anchors.anchor_energy_wh, anchors.anchor_active_params_b, anchors.ref_volume()),
                    Provenance::kCatalog, "observed prompt-energy anchor"});
  return est;
}

}  // namespace impactscreen
