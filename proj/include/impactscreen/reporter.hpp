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

#ifndef IMPACTSCREEN_REPORTER_HPP_
#define IMPACTSCREEN_REPORTER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "impactscreen/catalog.hpp"
#include "impactscreen/inference.hpp"
#include "impactscreen/training.hpp"

namespace impactscreen {

inline constexpr double kMonthsPerYear = 12.0;

struct AnnualizedEstimate {
  InferenceEstimate base;
  double requests_per_month = 0.0;
  double requests_per_year = 0.0;
  ScreeningBand annual_energy_kwh;
  /// g, kg or t per year, chosen from the central value.
  ScreeningBand annual_carbon;
};

/// Grams per one unit of an annual carbon unit (1, 1e3, 1e6).
double grams_per_unit(Unit annual_carbon_unit);

/// g below 1000 g, kg below 1000 kg, t otherwise.
Unit annual_carbon_unit(double central_grams);

/// Linear scaling of a per-request estimate; throws InvalidArgument when
/// requests_per_month < 1.
AnnualizedEstimate annualize(const InferenceEstimate& estimate, double requests_per_month);

struct ObservatoryRow {
  std::string model_id;
  std::string display_name;
  std::string country_code;
  bool assumed_params = false;
  bool fitted_factors = false;
  bool failed = false;
  std::string error;
  ScreeningBand inference_wh;
  ScreeningBand inference_g;
  ScreeningBand training_gwh;

  double inference_wh_central() const { return inference_wh.central; }
  double inference_g_central() const { return inference_g.central; }
  double training_gwh_central() const { return training_gwh.central; }
};

/// Standardized-request inference and training estimate for every model,
/// sorted by descending central inference energy (ties by id). Rows whose
/// estimate throws are kept, marked failed, and sorted last.
std::vector<ObservatoryRow> build_observatory(const Catalog& catalog);

enum class TableFormat { kCsv, kStructuredText };

std::optional<TableFormat> table_format_from_string(std::string_view s);

/// CSV header names, in column order.
const std::vector<std::string>& observatory_csv_columns();

/// CSV (RFC 4180 quoting, LF) or an aligned text table. Numbers are at
/// display precision, so the output is byte-stable.
std::string export_table(const std::vector<ObservatoryRow>& rows, TableFormat format);

/// Splits RFC 4180 CSV text into records of fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace impactscreen

#endif  // IMPACTSCREEN_REPORTER_HPP_
