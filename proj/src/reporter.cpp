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

#include "impactscreen/reporter.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "impactscreen/display.hpp"

namespace impactscreen {
namespace {

constexpr double kGramsPerKg = 1e3;
constexpr double kGramsPerTonne = 1e6;

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string flags(const ObservatoryRow& row) {
  std::string out;
  if (row.assumed_params) out += "assumed-params";
  if (row.fitted_factors) out += out.empty() ? "fitted" : " fitted";
  return out;
}

}  // namespace

double grams_per_unit(Unit unit) {
  switch (unit) {
    case Unit::kKilogramsPerYear: return kGramsPerKg;
    case Unit::kTonnesPerYear: return kGramsPerTonne;
    default: return 1.0;
  }
}

Unit annual_carbon_unit(double central_grams) {
  if (central_grams < kGramsPerKg) return Unit::kGramsPerYear;
  if (central_grams < kGramsPerTonne) return Unit::kKilogramsPerYear;
  return Unit::kTonnesPerYear;
}

AnnualizedEstimate annualize(const InferenceEstimate& estimate, double requests_per_month) {
  if (!(requests_per_month >= 1.0)) {
    throw InvalidArgument(fmt::format("requests per month must be >= 1 (got {})", requests_per_month));
  }
  AnnualizedEstimate out;
  out.base = estimate;
  out.requests_per_month = requests_per_month;
  out.requests_per_year = kMonthsPerYear * requests_per_month;
  const double per_year = out.requests_per_year;

  auto scale = [](const ScreeningBand& in, auto&& f, Unit unit) {
    ScreeningBand b;
    b.low = f(in.low);
    b.central = f(in.central);
    b.high = f(in.high);
    for (auto c : kAllCases) b.scenario_values[c] = f(in.scenario_values[c]);
    b.unit = unit;
    return b;
  };
  out.annual_energy_kwh =
      scale(estimate.energy_wh, [&](double wh) { return wh * per_year / 1000.0; }, Unit::kKwhPerYear);
  const Unit unit = annual_carbon_unit(estimate.carbon_g.central * per_year);
  const double divisor = grams_per_unit(unit);
  out.annual_carbon =
      scale(estimate.carbon_g, [&](double g) { return g * per_year / divisor; }, unit);
  return out;
}

std::vector<ObservatoryRow> build_observatory(const Catalog& catalog) {
  std::vector<ObservatoryRow> rows;
  rows.reserve(catalog.models.size());
  for (const auto& m : catalog.models) {
    ObservatoryRow row;
    row.model_id = m.id;
    row.display_name = m.display_name;
    row.country_code = m.provider_country;
    row.assumed_params = m.assumed;
    row.fitted_factors = m.factor_overrides && m.factor_overrides->fitted;
    try {
      const CountryMix* country = catalog.find_country(m.provider_country);
      if (!country) throw CatalogError(CatalogError::Kind::kUnresolvedCountry,
                                       fmt::format("no mix for provider country '{}'", m.provider_country));
      const InferenceEstimate inf = estimate_inference(m, TokenLoad::standardized(catalog.anchors), *country,
                                                       catalog.anchors, catalog.factors);
      const TrainingEstimate tr = estimate_training(m, catalog.training, catalog.factors, country);
      row.inference_wh = inf.energy_wh;
      row.inference_g = inf.carbon_g;
      row.training_gwh = tr.energy_gwh;
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ObservatoryRow& a, const ObservatoryRow& b) {
    if (a.failed != b.failed) return !a.failed;
    if (!a.failed && a.inference_wh.central != b.inference_wh.central) {
      return a.inference_wh.central > b.inference_wh.central;
    }
    return a.model_id < b.model_id;
  });
  return rows;
}

std::optional<TableFormat> table_format_from_string(std::string_view s) {
  if (s == "csv") return TableFormat::kCsv;
  if (s == "table" || s == "text") return TableFormat::kStructuredText;
  return std::nullopt;
}

const std::vector<std::string>& observatory_csv_columns() {
  static const std::vector<std::string> kColumns = {
      "id",
      "model",
      "country",
      "inference_wh_low",
      "inference_wh_central",
      "inference_wh_high",
      "inference_gco2e_low",
      "inference_gco2e_central",
      "inference_gco2e_high",
      "training_gwh_low",
      "training_gwh_central",
      "training_gwh_high",
      "assumed_params",
      "fitted_factors",
      "status",
  };
  return kColumns;
}

std::string export_table(const std::vector<ObservatoryRow>& rows, TableFormat format) {
  using display::fixed;
  std::string out;
  if (format == TableFormat::kCsv) {
    const auto& cols = observatory_csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += '\n';
    for (const auto& r : rows) {
      std::vector<std::string> f{r.model_id, r.display_name, r.country_code};
      if (r.failed) {
        f.insert(f.end(), 9, "");
      } else {
        const int e = display::kInferenceEnergyDecimals;
        const int g = display::kInferenceCarbonDecimals;
        f.insert(f.end(), {fixed(r.inference_wh.low, e), fixed(r.inference_wh.central, e),
                           fixed(r.inference_wh.high, e), fixed(r.inference_g.low, g),
                           fixed(r.inference_g.central, g), fixed(r.inference_g.high, g),
                           display::training_gwh(r.training_gwh.low), display::training_gwh(r.training_gwh.central),
                           display::training_gwh(r.training_gwh.high)});
      }
      f.push_back(r.assumed_params ? "true" : "false");
      f.push_back(r.fitted_factors ? "true" : "false");
      f.push_back(r.failed ? "failed: " + r.error : "ok");
      for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
      out += '\n';
    }
    return out;
  }

  std::vector<std::array<std::string, 5>> lines;
  lines.push_back({"Model", "Wh/request", "gCO2e/request", "Training GWh", "Flags"});
  for (const auto& r : rows) {
    if (r.failed) {
      lines.push_back({r.display_name, "-", "-", "-", "failed: " + r.error});
    } else {
      lines.push_back({r.display_name, fixed(r.inference_wh.central, display::kInferenceEnergyDecimals),
                       fixed(r.inference_g.central, display::kInferenceCarbonDecimals),
                       display::training_gwh(r.training_gwh.central), flags(r)});
    }
  }
  std::array<std::size_t, 5> width{};
  for (const auto& l : lines) {
    for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
  }
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto& l = lines[n];
    std::string line = fmt::format("{:<{}}  {:>{}}  {:>{}}  {:>{}}  {}", l[0], width[0], l[1], width[1], l[2],
                                   width[2], l[3], width[3], l[4]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
    if (n == 0) {
      out += std::string(width[0] + width[1] + width[2] + width[3] + width[4] + 8, '-') + '\n';
    }
  }
  out += "Central screening proxy per standardized request (1000 input + 550 output tokens); "
         "screening estimates, not audited declarations.\n";
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    any = true;
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += ch;
    }
  }
  if (any || !field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace impactscreen
