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

#ifndef IMPACTSCREEN_SERVICE_HPP_
#define IMPACTSCREEN_SERVICE_HPP_

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "impactscreen/catalog.hpp"
#include "impactscreen/estimator.hpp"
#include "impactscreen/reporter.hpp"
#include "impactscreen/scenario_parser.hpp"
#include "impactscreen/training.hpp"

namespace impactscreen {

inline constexpr std::string_view kDisclaimer =
    "screening estimate, not an audited declaration";

// JSON views shared by the HTTP API and the CLI's --json output. Every
// number is wrapped as {"value": ..., "unit": ...}.
namespace json_view {

nlohmann::json quantity(double value, std::string_view unit);
nlohmann::json band(const ScreeningBand& b, int decimals);
nlohmann::json assumptions(const AssumptionLedger& ledger);
nlohmann::json model(const ModelProfile& profile);
nlohmann::json scenario(const Scenario& s);
nlohmann::json estimate(const EstimateResult& result);
nlohmann::json training(const TrainingEstimate& t);
nlohmann::json observatory(const std::vector<ObservatoryRow>& rows);
nlohmann::json diagnostics(const std::vector<Diagnostic>& d);

}  // namespace json_view

/// Closed set of API error codes.
namespace api_error {
inline constexpr std::string_view kUnknownVersion = "unknown_version";
inline constexpr std::string_view kNotFound = "not_found";
inline constexpr std::string_view kMethodNotAllowed = "method_not_allowed";
inline constexpr std::string_view kInvalidRequest = "invalid_request";
inline constexpr std::string_view kParseFailed = "parse_failed";
inline constexpr std::string_view kUnknownModel = "unknown_model";
inline constexpr std::string_view kAmbiguousModel = "ambiguous_model";
inline constexpr std::string_view kUnknownCountry = "unknown_country";
inline constexpr std::string_view kInvalidTokens = "invalid_tokens";
inline constexpr std::string_view kInvalidVolume = "invalid_volume";
inline constexpr std::string_view kBadFormat = "bad_format";
inline constexpr std::string_view kInternal = "internal";
}  // namespace api_error

nlohmann::json error_body(std::string_view code, std::string_view message,
                          const nlohmann::json& details = nullptr);

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Transport-independent request handling over a shared immutable catalog.
/// Reload swaps the catalog atomically; in-flight requests keep the snapshot
/// they started with.
class Service {
 public:
  explicit Service(std::shared_ptr<const Catalog> catalog);

  std::shared_ptr<const Catalog> catalog() const { return std::atomic_load(&catalog_); }
  void reload(std::shared_ptr<const Catalog> catalog) { std::atomic_store(&catalog_, std::move(catalog)); }

  ApiResponse handle(std::string_view method, std::string_view path,
                     const std::map<std::string, std::string>& query,
                     std::string_view body) const;

 private:
  std::shared_ptr<const Catalog> catalog_;
};

/// Parses "host:port" (or ":port"). Throws InvalidArgument on garbage.
struct BindAddress {
  std::string host;
  int port = 0;
  static BindAddress parse(std::string_view text);
};

/// Serves `service` over HTTP until stop_server(). Returns false if the
/// address cannot be bound. Port 0 picks a free port; `on_ready` receives the
/// bound port once the socket is listening.
bool serve(const Service& service, const BindAddress& bind,
           const std::function<void(int)>& on_ready = {});
void stop_server();

}  // namespace impactscreen

#endif  // IMPACTSCREEN_SERVICE_HPP_
