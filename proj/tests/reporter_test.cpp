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

#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "impactscreen/display.hpp"
#include "test_support.hpp"

namespace impactscreen::test {
namespace {

InferenceEstimate standard_estimate(std::string_view id, std::string_view country,
                                    TokenLoad load = TokenLoad(1000, 550)) {
  const Catalog& cat = shipped_catalog();
  return estimate_inference(*cat.find_model(id), load, *cat.find_country(country), cat.anchors,
                            cat.factors);
}

InferenceEstimate one_wh_estimate() {
  InferenceEstimate e;
  e.energy_wh = ScreeningBand::from_cases(Triple{{1.0, 1.0, 1.0}}, Unit::kWhPerRequest);
  e.carbon_g = ScreeningBand::from_cases(Triple{{0.5, 0.5, 0.5}}, Unit::kGramsPerRequest);
  return e;
}

TEST(AnnualizeTest, OneWattHourThousandPerMonth) {
  const AnnualizedEstimate a = annualize(one_wh_estimate(), 1000.0);
  EXPECT_EQ(a.requests_per_year, 12000.0);
  EXPECT_DOUBLE_EQ(a.annual_energy_kwh.central, 12.0);
  EXPECT_EQ(a.annual_energy_kwh.unit, Unit::kKwhPerYear);
  EXPECT_EQ(a.annual_carbon.unit, Unit::kKilogramsPerYear);
  EXPECT_DOUBLE_EQ(a.annual_carbon.central, 6.0);
}

TEST(AnnualizeTest, RejectsZeroVolume) {
  EXPECT_THROW(annualize(one_wh_estimate(), 0.0), InvalidArgument);
  EXPECT_THROW(annualize(one_wh_estimate(), -3.0), InvalidArgument);
}

TEST(AnnualizeTest, MinistralChatbotInFrance) {
  // Per-request oracle: 2380 Wh over 240,000 requests.
  const InferenceEstimate e = standard_estimate("ministral-8b", "FR");
  EXPECT_NEAR(e.energy_wh.central, 2380.0 / 240000.0, 5e-6);
  const AnnualizedEstimate a = annualize(e, 20000.0);
  EXPECT_EQ(a.requests_per_year, 240000.0);
  EXPECT_EQ(display::fixed(a.annual_energy_kwh.central, 2), "2.38");
  EXPECT_EQ(a.annual_carbon.unit, Unit::kGramsPerYear);
  EXPECT_NEAR(a.annual_carbon.central, 96.0, 1.0);
}

TEST(AnnualizeTest, RetrievalAssistantInUnitedStates) {
  const Catalog& cat = shipped_catalog();
  const auto& rt = cat.lexicon.entry_for(RequestType::kRetrieval);
  const TokenLoad load(rt.default_input_tokens, rt.default_output_tokens);
  const InferenceEstimate e = standard_estimate("gpt-5-mini", "US", load);
  // Per-request oracle: 12.31 kWh over 48,000 requests.
  EXPECT_NEAR(e.energy_wh.central, 12310.0 / 48000.0, 1e-4);
  const AnnualizedEstimate a = annualize(e, 4000.0);
  EXPECT_EQ(display::fixed(a.annual_energy_kwh.central, 2), "12.31");
  EXPECT_EQ(a.annual_carbon.unit, Unit::kKilogramsPerYear);
  EXPECT_EQ(display::fixed(a.annual_carbon.central, 2), "4.74");
}

TEST(AnnualizeTest, CarbonUnitThresholds) {
  EXPECT_EQ(annual_carbon_unit(999.0), Unit::kGramsPerYear);
  EXPECT_EQ(annual_carbon_unit(1000.0), Unit::kKilogramsPerYear);
  EXPECT_EQ(annual_carbon_unit(999999.0), Unit::kKilogramsPerYear);
  EXPECT_EQ(annual_carbon_unit(1e6), Unit::kTonnesPerYear);
  EXPECT_EQ(grams_per_unit(Unit::kGramsPerYear), 1.0);
  EXPECT_EQ(grams_per_unit(Unit::kKilogramsPerYear), 1000.0);
  EXPECT_EQ(grams_per_unit(Unit::kTonnesPerYear), 1e6);
}

TEST(AnnualizePropertyTest, LinearOrderedAndUnitConsistent) {
  Gen gen(41);
  const Catalog& cat = shipped_catalog();
  for (int i = 0; i < 2000; ++i) {
    const InferenceEstimate e = estimate_inference(gen.profile(), gen.token_load(),
                                                   *cat.find_country(gen.coin() ? "US" : "FR"),
                                                   cat.anchors, cat.factors);
    const double m = std::floor(gen.log_uniform(1.0, 1e7));
    const AnnualizedEstimate a = annualize(e, m);
    const AnnualizedEstimate b = annualize(e, 2.0 * m);
    EXPECT_TRUE(relative_close(b.annual_energy_kwh.central, 2.0 * a.annual_energy_kwh.central, 1e-12));
    EXPECT_TRUE(relative_close(b.annual_energy_kwh.low, 2.0 * a.annual_energy_kwh.low, 1e-12));
    EXPECT_TRUE(relative_close(b.annual_energy_kwh.high, 2.0 * a.annual_energy_kwh.high, 1e-12));
    const double grams_a = a.annual_carbon.central * grams_per_unit(a.annual_carbon.unit);
    const double grams_b = b.annual_carbon.central * grams_per_unit(b.annual_carbon.unit);
    EXPECT_TRUE(relative_close(grams_b, 2.0 * grams_a, 1e-12));
    EXPECT_TRUE(relative_close(a.annual_energy_kwh.central, e.energy_wh.central * m * 12.0 / 1000.0, 1e-12));
    for (const ScreeningBand* band : {&a.annual_energy_kwh, &a.annual_carbon}) {
      EXPECT_LE(band->low, band->central);
      EXPECT_LE(band->central, band->high);
    }
  }
}

TEST(ObservatoryTest, ShippedCatalogRows) {
  const std::vector<ObservatoryRow> rows = build_observatory(shipped_catalog());
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i - 1].inference_wh.central, rows[i].inference_wh.central);
  }
  const auto it = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.model_id == "gpt-5-2"; });
  ASSERT_NE(it, rows.end());
  EXPECT_EQ(display::fixed(it->inference_wh.central, 4), "2.7897");
  EXPECT_EQ(display::fixed(it->inference_g.central, 4), "1.0740");
  EXPECT_EQ(display::training_gwh(it->training_gwh.central), "101.76");
  EXPECT_EQ(rows.front().model_id, "claude-opus-4-1");
}

TEST(ObservatoryTest, EmptyAndAnchorCatalogs) {
  Catalog empty = shipped_catalog();
  empty.models.clear();
  EXPECT_TRUE(build_observatory(empty).empty());
  const std::vector<ObservatoryRow> rows = build_observatory(anchor_catalog());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].inference_wh.central, 0.24);
}

TEST(ObservatoryTest, FailedRowDoesNotAbortTable) {
  // Overridden profiles bypass the table, so add one that needs the erased entry.
  Catalog cat = shipped_catalog();
  ModelProfile broken = anchor_profile();
  broken.id = "unfitted-moe";
  broken.arch_note = ArchNote::kMoeHybrid;
  cat.models.push_back(broken);
  cat.factors.erase(FactorKind::kArch, "moe_hybrid");
  const std::vector<ObservatoryRow> rows = build_observatory(cat);
  ASSERT_EQ(rows.size(), 9u);
  int failed = 0;
  for (const ObservatoryRow& r : rows) {
    if (r.failed) {
      ++failed;
      EXPECT_EQ(r.model_id, "unfitted-moe");
      EXPECT_NE(r.error.find("moe_hybrid"), std::string::npos);
    }
  }
  EXPECT_EQ(failed, 1);
  const std::string csv = export_table(rows, TableFormat::kCsv);
  EXPECT_NE(csv.find("unfitted-moe"), std::string::npos);
  EXPECT_NE(csv.find("gemini-2-5-pro"), std::string::npos);
}

TEST(ObservatoryTest, OrderIndependentOfCatalogOrder) {
  Catalog reversed = shipped_catalog();
  std::reverse(reversed.models.begin(), reversed.models.end());
  const auto a = build_observatory(shipped_catalog());
  const auto b = build_observatory(reversed);
  EXPECT_EQ(export_table(a, TableFormat::kCsv), export_table(b, TableFormat::kCsv));
}

TEST(ExportTableTest, CsvIsStableAndShaped) {
  const auto rows = build_observatory(shipped_catalog());
  const std::string first = export_table(rows, TableFormat::kCsv);
  const std::string second = export_table(build_observatory(shipped_catalog()), TableFormat::kCsv);
  EXPECT_EQ(first, second);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 9);
  EXPECT_EQ(first.find('\r'), std::string::npos);
  const auto table = parse_csv(first);
  ASSERT_EQ(table.size(), 9u);
  EXPECT_EQ(table[0], observatory_csv_columns());
}

TEST(ExportTableTest, EmptyTableIsHeaderOnly) {
  const std::string csv = export_table({}, TableFormat::kCsv);
  const auto table = parse_csv(csv);
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0], observatory_csv_columns());
}

TEST(ExportTableTest, CsvRoundTripsAtDisplayPrecision) {
  const auto rows = build_observatory(shipped_catalog());
  const auto table = parse_csv(export_table(rows, TableFormat::kCsv));
  const auto& header = table[0];
  auto col = [&](std::string_view name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& rec = table[i + 1];
    const ObservatoryRow& r = rows[i];
    EXPECT_EQ(rec[col("id")], r.model_id);
    EXPECT_EQ(rec[col("model")], r.display_name);
    EXPECT_EQ(rec[col("country")], r.country_code);
    EXPECT_DOUBLE_EQ(std::stod(rec[col("inference_wh_central")]), display::round_to(r.inference_wh.central, 4));
    EXPECT_DOUBLE_EQ(std::stod(rec[col("inference_gco2e_central")]), display::round_to(r.inference_g.central, 4));
    EXPECT_DOUBLE_EQ(std::stod(rec[col("training_gwh_central")]),
                     display::round_to(r.training_gwh.central, display::training_decimals(r.training_gwh.central)));
  }
}

TEST(ExportTableTest, CsvQuotesSpecialCharacters) {
  Catalog cat = anchor_catalog();
  cat.models[0].display_name = "Anchor, \"quoted\" model";
  const auto rows = build_observatory(cat);
  const std::string csv = export_table(rows, TableFormat::kCsv);
  EXPECT_NE(csv.find("\"Anchor, \"\"quoted\"\" model\""), std::string::npos) << csv;
  EXPECT_EQ(parse_csv(csv)[1][1], "Anchor, \"quoted\" model");
}

TEST(ExportTableTest, StructuredTextListsEveryModel) {
  const auto rows = build_observatory(shipped_catalog());
  const std::string text = export_table(rows, TableFormat::kStructuredText);
  for (const auto& r : rows) EXPECT_NE(text.find(r.display_name), std::string::npos);
  EXPECT_EQ(table_format_from_string("csv"), TableFormat::kCsv);
  EXPECT_EQ(table_format_from_string("table"), TableFormat::kStructuredText);
  EXPECT_FALSE(table_format_from_string("xlsx").has_value());
}

}  // namespace
}  // namespace impactscreen::test
