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

#ifndef IMPACTSCREEN_TRAINING_HPP_
#define IMPACTSCREEN_TRAINING_HPP_

#include <optional>
#include <string>

#include "impactscreen/catalog.hpp"
#include "impactscreen/types.hpp"

namespace impactscreen {

/// Training tokens per parameter assumed when no public count exists.
inline constexpr double kTokensPerParameterPrior = 20.0;

enum class TokenSource { kCatalog, kPrior20x };

std::string_view to_string(TokenSource s);

struct TrainingTokens {
  double billions = 0.0;
  TokenSource source = TokenSource::kCatalog;
};

TrainingTokens training_tokens(const ModelProfile& profile);

/// F_reg * F_arch-tr * F_hw for one case, or the training override.
double training_factor(const ModelProfile& profile, const FactorTable& factors,
                       ScreeningCase c);

/// Two-ratio power law without the factor product.
double training_power_law(const TrainingAnchor& anchor, double params_b, double tokens_b,
                          ScreeningCase c);

struct TrainingEstimate {
  std::string model_id;
  ScreeningBand energy_gwh;
  std::optional<ScreeningBand> carbon_t;
  std::string country_code;
  double tokens_used_b = 0.0;
  TokenSource token_source = TokenSource::kCatalog;
  AssumptionLedger assumptions;
};

/// Per-case training energy in GWh.
Triple estimate_training_energy(const ModelProfile& profile, const TrainingAnchor& anchor,
                                const FactorTable& factors);

TrainingEstimate estimate_training(const ModelProfile& profile, const TrainingAnchor& anchor,
                                   const FactorTable& factors,
                                   const CountryMix* country = nullptr);

}  // namespace impactscreen

#endif  // IMPACTSCREEN_TRAINING_HPP_
