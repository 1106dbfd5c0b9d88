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

#ifndef IMPACTSCREEN_DISPLAY_HPP_
#define IMPACTSCREEN_DISPLAY_HPP_

#include <string>

namespace impactscreen::display {

// Published precision.
inline constexpr int kInferenceEnergyDecimals = 4;
inline constexpr int kInferenceCarbonDecimals = 4;
inline constexpr int kAnnualDecimals = 2;

/// Rounds half-to-even at `decimals` places after the point.
double round_to(double value, int decimals);

/// Fixed-point text of round_to(value, decimals).
std::string fixed(double value, int decimals);

/// Training GWh: 2 decimals, or 4 when the value is below 0.01 so small
/// values do not print as zero.
int training_decimals(double gwh);
std::string training_gwh(double gwh);

/// Integer-valued counts print without decimals; others with two.
std::string count(double value);

}  // namespace impactscreen::display

#endif  // IMPACTSCREEN_DISPLAY_HPP_
