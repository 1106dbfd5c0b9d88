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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "impactscreen/display.hpp"
#include "test_support.hpp"

namespace impactscreen::test {
namespace {

constexpr int kCases = 2000;

const FactorTable& factors() { return shipped_catalog().factors; }

TEST(TrainingTokensTest, CatalogValueOrPrior) {
  ModelProfile m = anchor_profile();
  m.raw_active_params_b = 70.0;
  m.training_tokens_b = 1400.0;
  TrainingTokens t = training_tokens(m);
  EXPECT_EQ(t.billions, 1400.0);
  EXPECT_EQ(t.source, TokenSource::kCatalog);

  m.raw_active_params_b = 8.0;
  m.training_tokens_b.reset();
  t = training_tokens(m);
  EXPECT_EQ(t.billions, 160.0);
  EXPECT_EQ(t.source, TokenSource::kPrior20x);

  m.raw_active_params_b = 180.0;
  EXPECT_EQ(training_tokens(m).billions, 3600.0);
}

TEST(TrainingTokensTest, PriorRatioIsExactlyTwenty) {
  Gen gen(21);
  for (int i = 0; i < kCases; ++i) {
    ModelProfile m = gen.profile();
    m.training_tokens_b.reset();
    const TrainingEstimate e = estimate_training(m, anchor_catalog().training, factors());
    EXPECT_EQ(e.tokens_used_b, kTokensPerParameterPrior * m.raw_active_params_b);
    EXPECT_DOUBLE_EQ(e.tokens_used_b / m.raw_active_params_b, 20.0);
    EXPECT_EQ(e.token_source, TokenSource::kPrior20x);
  }
}

TEST(EstimateTrainingTest, AnchorIdentity) {
  const Catalog cat = anchor_catalog();
  const TrainingEstimate e = estimate_training(anchor_profile(), cat.training, cat.factors);
  for (ScreeningCase c : kAllCases) EXPECT_EQ(e.energy_gwh.scenario_values[c], 1.0);
  EXPECT_EQ(e.energy_gwh.low, 1.0);
  EXPECT_EQ(e.energy_gwh.high, 1.0);
  EXPECT_FALSE(e.carbon_t.has_value());
}

TEST(EstimateTrainingTest, ShippedAnchorIdentity) {
  const TrainingAnchor& a = shipped_catalog().training;
  ModelProfile m = anchor_profile();
  m.raw_active_params_b = a.anchor_params_b;
  m.training_tokens_b = a.anchor_tokens_b;
  const Triple e = estimate_training_energy(m, a, factors());
  for (ScreeningCase c : kAllCases) EXPECT_EQ(e[c], a.anchor_energy_gwh);
}

TEST(EstimateTrainingTest, DoublingParamsScalesByTwoToAlpha) {
  const Catalog cat = anchor_catalog();
  ModelProfile m = anchor_profile();
  const Triple base = estimate_training_energy(m, cat.training, cat.factors);
  m.raw_active_params_b *= 2.0;
  const Triple doubled = estimate_training_energy(m, cat.training, cat.factors);
  for (ScreeningCase c : kAllCases) {
    EXPECT_TRUE(relative_close(doubled[c], base[c] * std::pow(2.0, cat.training.alpha[c]), 1e-12));
  }
}

TEST(EstimateTrainingTest, PublishedCentralValues) {
  const Catalog& cat = shipped_catalog();
  const std::pair<const char*, const char*> rows[] = {
      {"claude-opus-4-1", "125.63"}, {"gpt-5-2", "101.76"},   {"gemini-2-5-pro", "1.26"},
      {"gpt-5-mini", "0.28"},        {"llama-3-1-70b", "0.16"}, {"gpt-4o-mini", "0.0027"},
      {"ministral-3b", "0.0004"}};
  for (const auto& [id, expected] : rows) {
    const TrainingEstimate e = estimate_training(*cat.find_model(id), cat.training, cat.factors);
    EXPECT_EQ(display::training_gwh(e.energy_gwh.central), expected) << id;
  }
}

TEST(EstimateTrainingTest, OptionalCarbonConversion) {
  const Catalog cat = anchor_catalog();
  const CountryMix& us = *cat.find_country("US");
  const TrainingEstimate e = estimate_training(anchor_profile(), cat.training, cat.factors, &us);
  ASSERT_TRUE(e.carbon_t.has_value());
  // 1 GWh = 1e6 kWh; grams to tonnes is 1e-6.
  EXPECT_DOUBLE_EQ(e.carbon_t->central, us.carbon_intensity_g_per_kwh);
  EXPECT_EQ(e.country_code, "US");
}

TEST(TrainingPropertyTest, FactorNeutralityReducesToPowerLaw) {
  Gen gen(22);
  const TrainingAnchor& a = shipped_catalog().training;
  for (int i = 0; i < kCases; ++i) {
    ModelProfile m = gen.profile();
    m.factor_overrides.reset();
    m.training_regime = TrainingRegime::kFoundationPretraining;
    m.arch_note = ArchNote::kDense;
    m.modality = Modality::kTextOnly;
    m.hardware_class = HardwareClass::kStandardAccelerator;
    const double tok = training_tokens(m).billions;
    const Triple e = estimate_training_energy(m, a, factors());
    for (ScreeningCase c : kAllCases) {
      EXPECT_EQ(training_factor(m, factors(), c), 1.0);
      EXPECT_EQ(e[c], training_power_law(a, m.raw_active_params_b, tok, c));
    }
  }
}

TEST(TrainingPropertyTest, OrderingMonotonicityDeterminism) {
  Gen gen(23);
  const TrainingAnchor& a = shipped_catalog().training;
  for (int i = 0; i < kCases; ++i) {
    ModelProfile m = gen.profile();
    const TrainingEstimate e = estimate_training(m, a, factors());
    const ScreeningBand& b = e.energy_gwh;
    ASSERT_LE(b.low, b.central);
    ASSERT_LE(b.central, b.high);
    const auto& raw = b.scenario_values.v;
    EXPECT_EQ(b.low, *std::min_element(raw.begin(), raw.end()));
    EXPECT_EQ(b.high, *std::max_element(raw.begin(), raw.end()));
    EXPECT_EQ(estimate_training(m, a, factors()).energy_gwh, b);

    const double k = gen.log_uniform(1.001, 10.0);
    m.training_tokens_b = training_tokens(m).billions;
    const Triple before = estimate_training_energy(m, a, factors());
    ModelProfile bigger_p = m;
    bigger_p.raw_active_params_b *= k;
    ModelProfile bigger_t = m;
    *bigger_t.training_tokens_b *= k;
    const Triple after_p = estimate_training_energy(bigger_p, a, factors());
    const Triple after_t = estimate_training_energy(bigger_t, a, factors());
    for (ScreeningCase c : kAllCases) {
      EXPECT_GT(after_p[c], before[c]);
      EXPECT_GT(after_t[c], before[c]);
    }
  }
}

}  // namespace
}  // namespace impactscreen::test
