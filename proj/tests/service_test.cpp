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


#include "impactscreen/service.hpp"

#include <chrono>
#include <future>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "impactscreen/display.hpp"
#include "test_support.hpp"

namespace impactscreen::test {
namespace {

using nlohmann::json;

class ServiceTest : public ::testing::Test {
 protected:
  ServiceTest() : service_(std::make_shared<const Catalog>(shipped_catalog())) {}

  ApiResponse get(std::string_view path, std::map<std::string, std::string> query = {}) const {
    return service_.handle("GET", path, query, "");
  }
  ApiResponse post(std::string_view path, const json& body) const {
    return service_.handle("POST", path, {}, body.dump());
  }
  static json body(const ApiResponse& r) { return json::parse(r.body); }

  Service service_;
};

// Every number must sit directly inside an object that names its unit.
void expect_units(const json& node, const std::string& path, bool parent_has_unit) {
  if (node.is_number()) {
    EXPECT_TRUE(parent_has_unit) << "bare number at " << path;
  } else if (node.is_object()) {
    const bool has_unit = node.contains("unit");
    for (const auto& [k, v] : node.items()) expect_units(v, path + "." + k, has_unit);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) expect_units(node[i], path + "[" + std::to_string(i) + "]", false);
  }
}

void expect_envelope(const ApiResponse& r, const Catalog& cat) {
  const json b = json::parse(r.body);
  EXPECT_EQ(b.at("methodology_version"), cat.methodology_version());
  EXPECT_EQ(r.headers.at("X-Methodology-Version"), cat.methodology_version());
  expect_units(b, "$", false);
}

TEST_F(ServiceTest, ListsModels) {
  const ApiResponse r = get("/v1/models");
  ASSERT_EQ(r.status, 200);
  const json b = body(r);
  ASSERT_EQ(b["models"].size(), 8u);
  EXPECT_EQ(b["models"][0]["id"], shipped_catalog().models[0].id);
  expect_envelope(r, shipped_catalog());

  const ApiResponse one = get("/v1/models/gpt-5-mini");
  ASSERT_EQ(one.status, 200);
  EXPECT_EQ(body(one)["model"]["raw_active_params"]["unit"], "B params");
  EXPECT_EQ(get("/v1/models/nope").status, 404);
}

TEST_F(ServiceTest, EmptyCatalogListsNothing) {
  Catalog empty = shipped_catalog();
  empty.models.clear();
  const Service svc(std::make_shared<const Catalog>(empty));
  const ApiResponse r = svc.handle("GET", "/v1/models", {}, "");
  ASSERT_EQ(r.status, 200);
  EXPECT_TRUE(body(r)["models"].empty());
}

TEST_F(ServiceTest, RoutingErrors) {
  const ApiResponse v2 = get("/v2/models");
  EXPECT_EQ(v2.status, 404);
  EXPECT_EQ(body(v2)["error"]["code"], "unknown_version");
  EXPECT_EQ(body(get("/nothing"))["error"]["code"], "not_found");
  EXPECT_EQ(body(get("/v1/unknown"))["error"]["code"], "not_found");
  const ApiResponse wrong = service_.handle("DELETE", "/v1/models", {}, "");
  EXPECT_EQ(wrong.status, 405);
  EXPECT_EQ(body(wrong)["error"]["code"], "method_not_allowed");
  EXPECT_EQ(get("/v1/parse").status, 405);
}

TEST_F(ServiceTest, ParseCanonicalSentence) {
  const ApiResponse r = post("/v1/parse", {{"description",
                                            "We use GPT-4o-mini for customer support, around 4,000 uses per month."}});
  ASSERT_EQ(r.status, 200);
  const json s = body(r)["scenario"];
  EXPECT_EQ(s["model_id"], "gpt-4o-mini");
  EXPECT_EQ(s["request_type"], "chat");
  EXPECT_EQ(s["requests_per_month"]["value"], 4000.0);
  EXPECT_EQ(s["field_provenance"]["model"], "explicit");
  EXPECT_EQ(s["field_provenance"]["request_type"], "inferred");
  EXPECT_EQ(s["field_provenance"]["token_load"], "default");
  EXPECT_EQ(s["field_provenance"]["country"], "default");
  expect_envelope(r, shipped_catalog());
}

TEST_F(ServiceTest, ParseErrors) {
  EXPECT_EQ(service_.handle("POST", "/v1/parse", {}, "").status, 400);
  EXPECT_EQ(post("/v1/parse", json::object()).status, 400);
  EXPECT_EQ(post("/v1/parse", {{"description", ""}}).status, 400);
  EXPECT_EQ(service_.handle("POST", "/v1/parse", {}, "{not json").status, 400);
  const ApiResponse r = post("/v1/parse", {{"description", "use FooNet 9"}});
  ASSERT_EQ(r.status, 422);
  const json err = body(r)["error"];
  EXPECT_EQ(err["code"], "parse_failed");
  const json diag = err["details"]["diagnostics"];
  ASSERT_FALSE(diag.empty());
  EXPECT_EQ(diag[0]["code"], "no_model");
  EXPECT_EQ(diag[0]["suggestions"].size(), 3u);
}

TEST_F(ServiceTest, EstimateStandardized) {
  const ApiResponse r = post("/v1/estimate", {{"model", "gpt-5-mini"}});
  ASSERT_EQ(r.status, 200);
  const json b = body(r);
  EXPECT_EQ(b["inference"]["energy"]["display"]["central"], "0.1706");
  EXPECT_EQ(b["inference"]["carbon"]["display"]["central"], "0.0657");
  EXPECT_TRUE(b["annual"].is_null());
  EXPECT_FALSE(b["assumptions"].empty());
  expect_envelope(r, shipped_catalog());

  // The response matches the engine bit for bit.
  const Catalog& cat = shipped_catalog();
  const InferenceEstimate direct = estimate_inference(*cat.find_model("gpt-5-mini"), TokenLoad(1000, 550),
                                                      *cat.find_country("US"), cat.anchors, cat.factors);
  EXPECT_EQ(b["inference"]["energy"]["central"].get<double>(), direct.energy_wh.central);
  EXPECT_EQ(b["inference"]["carbon"]["high"].get<double>(), direct.carbon_g.high);
}

TEST_F(ServiceTest, EstimateAnchorModel) {
  const Service svc(std::make_shared<const Catalog>(anchor_catalog()));
  const ApiResponse r = svc.handle("POST", "/v1/estimate", {}, R"({"model": "anchor-model"})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["inference"]["energy"]["central"].get<double>(), 0.24);
}

TEST_F(ServiceTest, EstimateChatbotScenarioAnnualizes) {
  const json req = {{"scenario",
                     {{"model_id", "ministral-8b"},
                      {"request_type", "chat"},
                      {"requests_per_month", {{"value", 20000}, {"unit", "requests/month"}}},
                      {"country_code", "FR"}}}};
  const ApiResponse r = post("/v1/estimate", req);
  ASSERT_EQ(r.status, 200);
  const json b = body(r);
  EXPECT_EQ(b["annual"]["energy"]["display"]["central"], "2.38");
  EXPECT_EQ(b["annual"]["energy"]["unit"], "kWh/year");
  EXPECT_EQ(b["annual"]["carbon"]["unit"], "gCO2e/year");
  expect_envelope(r, shipped_catalog());
}

TEST_F(ServiceTest, EstimateOverridesWin) {
  const json req = {{"scenario", {{"model_id", "gpt-5-mini"}, {"country_code", "US"}}},
                    {"overrides", {{"country_code", "FR"}, {"input_tokens", 500}, {"output_tokens", 250}}}};
  const ApiResponse r = post("/v1/estimate", req);
  ASSERT_EQ(r.status, 200);
  const json b = body(r);
  EXPECT_EQ(b["inference"]["country_code"], "FR");
  EXPECT_EQ(b["inference"]["weighted_volume"]["value"].get<double>(), 950.0);
  EXPECT_EQ(b["scenario"]["field_provenance"]["token_load"], "explicit");
}

TEST_F(ServiceTest, EstimateErrors) {
  const ApiResponse unknown = post("/v1/estimate", {{"model", "foonet-9"}});
  EXPECT_EQ(unknown.status, 404);
  EXPECT_EQ(body(unknown)["error"]["code"], "unknown_model");
  EXPECT_EQ(body(unknown)["error"]["details"]["suggestions"].size(), 3u);
  const ApiResponse tokens = post("/v1/estimate", {{"model", "gpt-5-mini"}, {"input_tokens", 0}, {"output_tokens", 0}});
  EXPECT_EQ(tokens.status, 422);
  EXPECT_EQ(body(tokens)["error"]["code"], "invalid_tokens");
  const ApiResponse volume = post("/v1/estimate", {{"model", "gpt-5-mini"}, {"requests_per_month", 0}});
  EXPECT_EQ(volume.status, 422);
  EXPECT_EQ(body(volume)["error"]["code"], "invalid_volume");
  const ApiResponse country = post("/v1/estimate", {{"model", "gpt-5-mini"}, {"country", "ZZ"}});
  EXPECT_EQ(country.status, 422);
  EXPECT_EQ(body(country)["error"]["code"], "unknown_country");
  const ApiResponse ambiguous = post("/v1/estimate", {{"model", "gpt"}});
  EXPECT_EQ(ambiguous.status, 422);
  EXPECT_EQ(body(ambiguous)["error"]["code"], "ambiguous_model");
  EXPECT_EQ(post("/v1/estimate", json::object()).status, 400);
  EXPECT_EQ(post("/v1/estimate", {{"model", 5}}).status, 400);
}

TEST_F(ServiceTest, Training) {
  const ApiResponse r = get("/v1/models/claude-opus-4-1/training");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["energy"]["display"]["central"], "125.63");
  expect_envelope(r, shipped_catalog());
  const ApiResponse missing = get("/v1/models/foonet/training");
  EXPECT_EQ(missing.status, 404);
  EXPECT_EQ(body(missing)["error"]["code"], "unknown_model");

  const Catalog cat = anchor_catalog();
  const Service svc(std::make_shared<const Catalog>(cat));
  const ApiResponse anchor = svc.handle("GET", "/v1/models/anchor-model/training", {}, "");
  ASSERT_EQ(anchor.status, 200);
  EXPECT_EQ(body(anchor)["energy"]["central"].get<double>(), cat.training.anchor_energy_gwh);
}

TEST_F(ServiceTest, Observatory) {
  const ApiResponse j = get("/v1/observatory", {{"format", "json"}});
  ASSERT_EQ(j.status, 200);
  const auto rows = build_observatory(shipped_catalog());
  const json list = body(j)["rows"];
  ASSERT_EQ(list.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(list[i]["id"], rows[i].model_id);
    EXPECT_EQ(list[i]["inference_energy"]["central"].get<double>(), rows[i].inference_wh.central);
  }
  expect_envelope(j, shipped_catalog());
  EXPECT_EQ(get("/v1/observatory").status, 200);

  const ApiResponse csv = get("/v1/observatory", {{"format", "csv"}});
  ASSERT_EQ(csv.status, 200);
  EXPECT_EQ(csv.body, export_table(rows, TableFormat::kCsv));
  EXPECT_NE(csv.content_type.find("text/csv"), std::string::npos);

  const ApiResponse bad = get("/v1/observatory", {{"format", "xml"}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(body(bad)["error"]["code"], "bad_format");
}

TEST_F(ServiceTest, ResponsesAreStable) {
  const json req = {{"model", "gemini-2-5-pro"}, {"requests_per_month", 1234}};
  EXPECT_EQ(post("/v1/estimate", req).body, post("/v1/estimate", req).body);
  EXPECT_EQ(get("/v1/models").body, get("/v1/models").body);
}

TEST_F(ServiceTest, ReloadSwapsCatalog) {
  Service svc(std::make_shared<const Catalog>(shipped_catalog()));
  svc.reload(std::make_shared<const Catalog>(anchor_catalog()));
  EXPECT_EQ(body(svc.handle("GET", "/v1/models", {}, ""))["models"].size(), 1u);
}

TEST(BindAddressTest, Parses) {
  const BindAddress a = BindAddress::parse("127.0.0.1:8080");
  EXPECT_EQ(a.host, "127.0.0.1");
  EXPECT_EQ(a.port, 8080);
  EXPECT_EQ(BindAddress::parse("0.0.0.0:0").port, 0);
  EXPECT_THROW(BindAddress::parse("garbage"), InvalidArgument);
  EXPECT_THROW(BindAddress::parse("host:99999"), InvalidArgument);
  EXPECT_THROW(BindAddress::parse("host:"), InvalidArgument);
}

TEST(HttpSmokeTest, ServesOverLoopback) {
  const Service svc(std::make_shared<const Catalog>(shipped_catalog()));
  std::promise<int> port_promise;
  auto port_future = port_promise.get_future();
  std::thread server([&] {
    serve(svc, BindAddress{"127.0.0.1", 0}, [&](int port) { port_promise.set_value(port); });
  });
  ASSERT_EQ(port_future.wait_for(std::chrono::seconds(5)), std::future_status::ready);
  const int port = port_future.get();

  httplib::Client client("127.0.0.1", port);
  const auto models = client.Get("/v1/models");
  ASSERT_TRUE(models);
  EXPECT_EQ(models->status, 200);
  EXPECT_EQ(json::parse(models->body)["models"].size(), 8u);
  EXPECT_EQ(models->get_header_value("X-Methodology-Version"), shipped_catalog().methodology_version());

  const auto parsed = client.Post("/v1/parse", R"({"description": "gpt-5-mini chat 100 per day"})",
                                  "application/json");
  ASSERT_TRUE(parsed);
  EXPECT_EQ(parsed->status, 200);

  const auto csv = client.Get("/v1/observatory?format=csv");
  ASSERT_TRUE(csv);
  EXPECT_EQ(csv->body, export_table(build_observatory(shipped_catalog()), TableFormat::kCsv));

  stop_server();
  server.join();
}

}  // namespace
}  // namespace impactscreen::test
