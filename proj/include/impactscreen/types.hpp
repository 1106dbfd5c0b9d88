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

#ifndef IMPACTSCREEN_TYPES_HPP_
#define IMPACTSCREEN_TYPES_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace impactscreen {

/// The three screening parameterizations. Each one picks its own exponent
/// and factor values; the reported band is built from all three.
enum class ScreeningCase : std::size_t { kLow = 0, kCentral = 1, kHigh = 2 };

inline constexpr std::array<ScreeningCase, 3> kAllCases = {
    ScreeningCase::kLow, ScreeningCase::kCentral, ScreeningCase::kHigh};

std::string_view to_string(ScreeningCase c);

/// One value per screening case, indexed by ScreeningCase.
struct Triple {
  std::array<double, 3> v{1.0, 1.0, 1.0};

  constexpr double operator[](ScreeningCase c) const {
    return v[static_cast<std::size_t>(c)];
  }
  constexpr double& operator[](ScreeningCase c) {
    return v[static_cast<std::size_t>(c)];
  }
  constexpr double low() const { return v[0]; }
  constexpr double central() const { return v[1]; }
  constexpr double high() const { return v[2]; }

  friend constexpr Triple operator*(const Triple& a, const Triple& b) {
    return {{a.v[0] * b.v[0], a.v[1] * b.v[1], a.v[2] * b.v[2]}};
  }
  friend bool operator==(const Triple&, const Triple&) = default;
};

enum class Unit {
  kWhPerRequest,
  kGramsPerRequest,
  kKwhPerYear,
  kGramsPerYear,
  kKilogramsPerYear,
  kTonnesPerYear,
  kGwh,
  kTonnes,
  kBillionParams,
};

std::string_view to_string(Unit u);

/// Low/central/high value of one quantity. `low` and `high` are the min and
/// max over the raw per-case values; `central` is always the central case.
struct ScreeningBand {
  double low = 0.0;
  double central = 0.0;
  double high = 0.0;
  Triple scenario_values;
  Unit unit = Unit::kWhPerRequest;

  static ScreeningBand from_cases(const Triple& raw, Unit unit);

  /// Multiplies every value by a positive factor; ordering is preserved.
  ScreeningBand scaled(double factor, Unit new_unit) const;

  friend bool operator==(const ScreeningBand&, const ScreeningBand&) = default;
};

/// Where an input to an estimate came from.
enum class Provenance { kUser, kCatalog, kDefault, kDerived };

std::string_view to_string(Provenance p);

/// One line of an assumptions ledger.
struct Assumption {
  std::string name;
  std::string value;
  Provenance provenance = Provenance::kCatalog;
  std::string note;

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

using AssumptionLedger = std::vector<Assumption>;

/// Thrown for inputs that violate a type invariant (e.g. an empty token load).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace impactscreen

#endif  // IMPACTSCREEN_TYPES_HPP_
