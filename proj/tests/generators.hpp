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


#ifndef IMPACTSCREEN_TESTS_GENERATORS_HPP_
#define IMPACTSCREEN_TESTS_GENERATORS_HPP_

#include <cmath>
#include <random>

#include "impactscreen/catalog.hpp"
#include "impactscreen/inference.hpp"

namespace impactscreen::test {

// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Log-uniform on [lo, hi]; spreads samples across orders of magnitude.
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  bool coin() { return integer(0, 1) == 1; }

  template <typename E>
  E pick(std::initializer_list<E> values) {
    return *(values.begin() + integer(0, static_cast<int>(values.size()) - 1));
  }

  TokenLoad token_load() {
    const double in = coin() ? std::floor(log_uniform(1.0, 200000.0)) : 0.0;
    const double out = std::floor(log_uniform(1.0, 50000.0));
    return TokenLoad(in, out);
  }

  /// Profile whose categories are all covered by the shipped factor table.
  ModelProfile profile() {
    ModelProfile m;
    m.id = "gen-model";
    m.display_name = "Generated";
    m.raw_active_params_b = log_uniform(0.1, 5000.0);
    m.context_class = pick({ContextClass::kShort, ContextClass::kStandard, ContextClass::kLong,
                            ContextClass::kVeryLong});
    m.serving_mode = pick({ServingMode::kDedicated, ServingMode::kSharedHosted, ServingMode::kEdge});
    m.modality = pick({Modality::kTextOnly, Modality::kMultimodal});
    m.arch_note = pick({ArchNote::kDense, ArchNote::kMoeHybrid, ArchNote::kUnknown});
    m.provider_country = coin() ? "US" : "FR";
    if (coin()) m.training_tokens_b = log_uniform(1.0, 50000.0);
    m.training_regime = pick({TrainingRegime::kFoundationPretraining,
                              TrainingRegime::kContinuedPretraining, TrainingRegime::kDistilled});
    m.hardware_class = pick({HardwareClass::kFrontierAccelerator,
                             HardwareClass::kStandardAccelerator, HardwareClass::kUnknown});
    if (integer(0, 4) == 0) {
      FactorOverrides o;
      const double c = log_uniform(0.05, 5.0);
      o.inference = Triple{{c * 0.8, c, c * 1.25}};
      if (coin()) o.training = Triple{{c * 0.5, c, c * 2.0}};
      m.factor_overrides = o;
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool relative_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace impactscreen::test

#endif  // IMPACTSCREEN_TESTS_GENERATORS_HPP_
