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

#include "impactscreen/display.hpp"

#include <cfenv>
#include <cmath>

#include <fmt/format.h>

namespace impactscreen::display {

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // nearbyint honours the current rounding mode; force ties-to-even.
  const int saved = std::fegetround();
  std::fesetround(FE_TONEAREST);
  const double r = std::nearbyint(value * scale) / scale;
  std::fesetround(saved);
  return r;
}

std::string fixed(double value, int decimals) {
  double r = round_to(value, decimals);
  if (r == 0.0) r = 0.0;  // no "-0.0000"
  return fmt::format("{:.{}f}", r, decimals);
}

int training_decimals(double gwh) { return std::fabs(gwh) < 0.01 ? 4 : 2; }

std::string training_gwh(double gwh) { return fixed(gwh, training_decimals(gwh)); }

std::string count(double value) {
  if (value == std::floor(value) && std::fabs(value) < 1e15) {
    return fmt::format("{:.0f}", value);
  }
  return fmt::format("{:.2f}", value);
}

}  // namespace impactscreen::display
