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

#ifndef IMPACTSCREEN_INFERENCE_HPP_
#define IMPACTSCREEN_INFERENCE_HPP_

#include <string>

#include "impactscreen/catalog.hpp"
#include "impactscreen/types.hpp"

namespace impactscreen {

/// Input and output tokens of one request. Rejects negative counts and the
/// empty (0, 0) load, which would read as a free request.
class TokenLoad {
 public:
  TokenLoad(double input_tokens, double output_tokens);

  /// The standardized request of the anchor constants.
  static TokenLoad standardized(const AnchorConstants& anchors);

  double input_tokens() const { return input_; }
  double output_tokens() const { return output_; }

  friend bool operator==(const TokenLoad&, const TokenLoad&) = default;

 private:
  double input_;
  double output_;
};

/// T_in + w * T_out, unrounded.
double weighted_volume(const TokenLoad& load, const AnchorConstants& anchors);

/// Raw active parameters times the context, serving, modality and
/// architecture multipliers of one case. An inference override replaces the
/// table product.
double effective_params(const ModelProfile& profile, const FactorTable& factors,
                        ScreeningCase c);

Triple effective_params(const ModelProfile& profile, const FactorTable& factors);

/// Anchored power law at a given effective size and weighted volume.
double energy_per_request(const AnchorConstants& anchors, double effective_params_b,
                          double volume, ScreeningCase c);

/// Per-case energy in Wh for one request.
Triple estimate_energy(const ModelProfile& profile, const TokenLoad& load,
                       const AnchorConstants& anchors, const FactorTable& factors);

/// Grams CO2e for `energy_wh` under a carbon intensity in g/kWh.
constexpr double carbon_grams(double energy_wh, double intensity_g_per_kwh) {
  return energy_wh / 1000.0 * intensity_g_per_kwh;
}

struct InferenceEstimate {
  std::string model_id;
  ScreeningBand energy_wh;
  ScreeningBand carbon_g;
  Triple effective_params_b;
  double volume = 0.0;
  TokenLoad load{1000.0, 550.0};
  std::string country_code;
  double carbon_intensity_g_per_kwh = 0.0;
  AssumptionLedger assumptions;
};

/// How the caller obtained the load and country; recorded in the ledger.
struct InputProvenance {
  Provenance load = Provenance::kUser;
  std::string load_note;
  Provenance country = Provenance::kUser;
  std::string country_note;
};

InferenceEstimate estimate_inference(const ModelProfile& profile, const TokenLoad& load,
                                     const CountryMix& country,
                                     const AnchorConstants& anchors,
                                     const FactorTable& factors,
                                     const InputProvenance& provenance = {});

}  // namespace impactscreen

#endif  // IMPACTSCREEN_INFERENCE_HPP_
