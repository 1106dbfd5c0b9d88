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

#include "impactscreen/types.hpp"

#include <algorithm>

namespace impactscreen {

std::string_view to_string(ScreeningCase c) {
  switch (c) {
    case ScreeningCase::kLow: return "low";
    case ScreeningCase::kCentral: return "central";
    case ScreeningCase::kHigh: return "high";
  }
  return "?";
}

std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::kWhPerRequest: return "Wh/request";
    case Unit::kGramsPerRequest: return "gCO2e/request";
    case Unit::kKwhPerYear: return "kWh/year";
    case Unit::kGramsPerYear: return "gCO2e/year";
    case Unit::kKilogramsPerYear: return "kgCO2e/year";
    case Unit::kTonnesPerYear: return "tCO2e/year";
    case Unit::kGwh: return "GWh";
    case Unit::kTonnes: return "tCO2e";
    case Unit::kBillionParams: return "B params";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kUser: return "user";
    case Provenance::kCatalog: return "catalog";
    case Provenance::kDefault: return "default";
    case Provenance::kDerived: return "derived";
  }
  return "?";
}

ScreeningBand ScreeningBand::from_cases(const Triple& raw, Unit unit) {
  const auto [lo, hi] = std::minmax_element(raw.v.begin(), raw.v.end());
  return ScreeningBand{*lo, raw.central(), *hi, raw, unit};
}

ScreeningBand ScreeningBand::scaled(double factor, Unit new_unit) const {
  ScreeningBand out;
  out.low = low * factor;
  out.central = central * factor;
  out.high = high * factor;
  for (auto c : kAllCases) out.scenario_values[c] = scenario_values[c] * factor;
  out.unit = new_unit;
  return out;
}

}  // namespace impactscreen
