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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <mutex>
#include <regex>

#include <fmt/format.h>
#include <httplib.h>

#include "impactscreen/display.hpp"

namespace impactscreen {

using nlohmann::json;

namespace json_view {

json quantity(double value, std::string_view unit) {
  return {{"value", value}, {"unit", unit}};
}

namespace {

json triple(const Triple& t, std::string_view unit) {
  return {{"unit", unit}, {"low", t.low()}, {"central", t.central()}, {"high", t.high()}};
}

// Band with per-value display text; `decimals` < 0 selects the training rule.
json band_impl(const ScreeningBand& b, int decimals) {
  auto text = [&](double v) {
    return decimals < 0 ? display::training_gwh(v) : display::fixed(v, decimals);
  };
  return {
      {"unit", to_string(b.unit)},
      {"low", b.low},
      {"central", b.central},
      {"high", b.high},
      {"scenario_values", triple(b.scenario_values, to_string(b.unit))},
      {"display", {{"low", text(b.low)}, {"central", text(b.central)}, {"high", text(b.high)}}},
  };
}

}  // namespace

json band(const ScreeningBand& b, int decimals) { return band_impl(b, decimals); }

json assumptions(const AssumptionLedger& ledger) {
  json out = json::array();
  for (const auto& a : ledger) {
    out.push_back({{"name", a.name}, {"value", a.value}, {"provenance", to_string(a.provenance)},
                   {"note", a.note}});
  }
  return out;
}

json model(const ModelProfile& m) {
  json out = {
      {"id", m.id},
      {"display_name", m.display_name},
      {"aliases", m.aliases},
      {"raw_active_params", quantity(m.raw_active_params_b, to_string(Unit::kBillionParams))},
      {"assumed", m.assumed},
      {"context_class", to_string(m.context_class)},
      {"serving_mode", to_string(m.serving_mode)},
      {"modality", to_string(m.modality)},
      {"arch_note", to_string(m.arch_note)},
      {"provider_country", m.provider_country},
      {"training_tokens", m.training_tokens_b ? quantity(*m.training_tokens_b, "B tokens") : json(nullptr)},
      {"training_regime", to_string(m.training_regime)},
      {"hardware_class", to_string(m.hardware_class)},
      {"fitted_factors", m.factor_overrides && m.factor_overrides->fitted},
  };
  if (m.factor_overrides) {
    json fo = {{"fitted", m.factor_overrides->fitted}};
    if (m.factor_overrides->inference) fo["inference"] = triple(*m.factor_overrides->inference, "multiplier");
    if (m.factor_overrides->training) fo["training"] = triple(*m.factor_overrides->training, "multiplier");
    out["factor_overrides"] = fo;
  } else {
    out["factor_overrides"] = nullptr;
  }
  return out;
}

json scenario(const Scenario& s) {
  json prov = json::object();
  for (std::string_view f : field::kAll) prov[std::string(f)] = to_string(s.provenance_of(f));
  return {
      {"model_id", s.model_id},
      {"request_type", to_string(s.request_type)},
      {"token_load",
       {{"unit", "tokens"}, {"input", s.token_load.input_tokens()}, {"output", s.token_load.output_tokens()}}},
      {"requests_per_month",
       s.requests_per_month ? quantity(*s.requests_per_month, "requests/month") : json(nullptr)},
      {"country_code", s.country_code ? json(*s.country_code) : json(nullptr)},
      {"field_provenance", prov},
      {"summary", render_scenario(s)},
  };
}

json estimate(const EstimateResult& r) {
  const InferenceEstimate& inf = r.inference;
  json out = {
      {"model", {{"id", r.model->id}, {"display_name", r.model->display_name}}},
      {"scenario", scenario(r.scenario)},
      {"inference",
       {{"energy", band(inf.energy_wh, display::kInferenceEnergyDecimals)},
        {"carbon", band(inf.carbon_g, display::kInferenceCarbonDecimals)},
        {"effective_params", triple(inf.effective_params_b, to_string(Unit::kBillionParams))},
        {"weighted_volume", quantity(inf.volume, "weighted tokens")},
        {"country_code", inf.country_code},
        {"carbon_intensity", quantity(inf.carbon_intensity_g_per_kwh, "gCO2e/kWh")}}},
      {"annual", nullptr},
      {"assumptions", assumptions(inf.assumptions)},
      {"disclaimer", kDisclaimer},
  };
  if (r.annual) {
    out["annual"] = {
        {"requests_per_year", quantity(r.annual->requests_per_year, "requests/year")},
        {"energy", band(r.annual->annual_energy_kwh, display::kAnnualDecimals)},
        {"carbon", band(r.annual->annual_carbon, display::kAnnualDecimals)},
    };
  }
  return out;
}

json training(const TrainingEstimate& t) {
  return {
      {"model_id", t.model_id},
      {"energy", band(t.energy_gwh, -1)},
      {"carbon", t.carbon_t ? band(*t.carbon_t, 2) : json(nullptr)},
      {"country_code", t.country_code.empty() ? json(nullptr) : json(t.country_code)},
      {"training_tokens",
       {{"value", t.tokens_used_b}, {"unit", "B tokens"}, {"source", to_string(t.token_source)}}},
      {"assumptions", assumptions(t.assumptions)},
      {"disclaimer", kDisclaimer},
  };
}

json observatory(const std::vector<ObservatoryRow>& rows) {
  json list = json::array();
  for (const auto& r : rows) {
    json row = {
        {"id", r.model_id},
        {"model", r.display_name},
        {"country", r.country_code},
        {"assumed_params", r.assumed_params},
        {"fitted_factors", r.fitted_factors},
        {"status", r.failed ? "failed" : "ok"},
    };
    if (r.failed) {
      row["error"] = r.error;
    } else {
      row["inference_energy"] = band(r.inference_wh, display::kInferenceEnergyDecimals);
      row["inference_carbon"] = band(r.inference_g, display::kInferenceCarbonDecimals);
      row["training_energy"] = band(r.training_gwh, -1);
    }
    list.push_back(std::move(row));
  }
  return {{"rows", list},
          {"basis", "standardized request (1000 input + 550 output tokens)"},
          {"disclaimer", kDisclaimer}};
}

json diagnostics(const std::vector<Diagnostic>& d) {
  json out = json::array();
  for (const auto& x : d) {
    out.push_back({{"code", to_string(x.code)}, {"message", x.message}, {"suggestions", x.suggestions}});
  }
  return out;
}

}  // namespace json_view

json error_body(std::string_view code, std::string_view message, const json& details) {
  json err = {{"code", code}, {"message", message}};
  if (!details.is_null()) err["details"] = details;
  return {{"error", err}};
}

namespace {

// Thrown by request decoding; becomes a 4xx response.
struct RequestError {
  int status;
  std::string_view code;
  std::string message;
  json details = nullptr;
};

std::optional<double> number_field(const json& obj, std::string_view key) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end() || it->is_null()) return std::nullopt;
  const json& v = it->is_object() && it->contains("value") ? (*it)["value"] : *it;
  if (!v.is_number()) {
    throw RequestError{400, api_error::kInvalidRequest, fmt::format("field '{}' must be a number", key)};
  }
  return v.get<double>();
}

std::optional<std::string> string_field(const json& obj, std::string_view key) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw RequestError{400, api_error::kInvalidRequest, fmt::format("field '{}' must be a string", key)};
  }
  return it->get<std::string>();
}

// Applies one scenario-shaped object to the request. `mark_explicit` tags
// every field it sets as user input (used for overrides).
void apply_fields(const json& obj, EstimateRequest& req, bool mark_explicit) {
  if (!obj.is_object()) throw RequestError{400, api_error::kInvalidRequest, "scenario must be a JSON object"};
  auto mark = [&](std::string_view f) {
    if (mark_explicit) req.field_provenance[std::string(f)] = FieldProvenance::kExplicit;
  };
  if (auto m = string_field(obj, "model_id")) {
    req.model = *m;
    mark(field::kModel);
  } else if (auto m2 = string_field(obj, "model")) {
    req.model = *m2;
    mark(field::kModel);
  }
  if (auto t = string_field(obj, "request_type")) {
    const auto rt = request_type_from_string(*t);
    if (!rt) throw RequestError{400, api_error::kInvalidRequest, fmt::format("unknown request_type '{}'", *t)};
    req.request_type = *rt;
    mark(field::kRequestType);
  }
  if (const auto it = obj.find("token_load"); it != obj.end() && it->is_object()) {
    if (auto in = number_field(*it, "input")) req.input_tokens = in;
    if (auto out = number_field(*it, "output")) req.output_tokens = out;
    mark(field::kTokenLoad);
  }
  if (auto in = number_field(obj, "input_tokens")) {
    req.input_tokens = in;
    mark(field::kTokenLoad);
  }
  if (auto out = number_field(obj, "output_tokens")) {
    req.output_tokens = out;
    mark(field::kTokenLoad);
  }
  if (auto v = number_field(obj, "requests_per_month")) {
    req.requests_per_month = v;
    mark(field::kRequestsPerMonth);
  }
  if (auto c = string_field(obj, "country_code")) {
    req.country = *c;
    mark(field::kCountry);
  } else if (auto c2 = string_field(obj, "country")) {
    req.country = *c2;
    mark(field::kCountry);
  }
  if (!mark_explicit) {
    if (const auto it = obj.find("field_provenance"); it != obj.end() && it->is_object()) {
      for (const auto& [key, value] : it->items()) {
        if (!value.is_string()) continue;
        if (auto p = field_provenance_from_string(value.get<std::string>())) req.field_provenance[key] = *p;
      }
    }
  }
}

json parse_body(std::string_view body) {
  if (body.empty()) throw RequestError{400, api_error::kInvalidRequest, "request body is empty"};
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw RequestError{400, api_error::kInvalidRequest, "request body must be a JSON object"};
  }
  return parsed;
}

std::string_view estimate_error_code(EstimateError::Code c) {
  switch (c) {
    case EstimateError::Code::kUnknownModel: return api_error::kUnknownModel;
    case EstimateError::Code::kAmbiguousModel: return api_error::kAmbiguousModel;
    case EstimateError::Code::kUnknownCountry: return api_error::kUnknownCountry;
    case EstimateError::Code::kInvalidTokens: return api_error::kInvalidTokens;
    case EstimateError::Code::kInvalidVolume: return api_error::kInvalidVolume;
  }
  return api_error::kInternal;
}

int estimate_error_status(EstimateError::Code c) {
  switch (c) {
    case EstimateError::Code::kUnknownModel: return 404;
    case EstimateError::Code::kAmbiguousModel: return 422;
    default: return 422;
  }
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    const std::size_t next = path.find('/', pos);
    const std::string_view part = path.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (!part.empty()) parts.push_back(part);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

bool is_version_segment(std::string_view s) {
  return s.size() >= 2 && s[0] == 'v' &&
         std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

}  // namespace

Service::Service(std::shared_ptr<const Catalog> catalog) : catalog_(std::move(catalog)) {}

ApiResponse Service::handle(std::string_view method, std::string_view path,
                            const std::map<std::string, std::string>& query, std::string_view body) const {
  const std::shared_ptr<const Catalog> snapshot = catalog();
  const Catalog& cat = *snapshot;
  const std::string version = cat.methodology_version();

  auto reply = [&](int status, json payload) {
    payload["methodology_version"] = version;
    ApiResponse r;
    r.status = status;
    r.body = payload.dump();
    r.headers["X-Methodology-Version"] = version;
    return r;
  };
  auto error = [&](int status, std::string_view code, std::string_view message, const json& details = nullptr) {
    return reply(status, error_body(code, message, details));
  };

  const auto parts = split_path(path);
  if (parts.empty() || !is_version_segment(parts[0])) {
    return error(404, api_error::kNotFound, fmt::format("no route for {}", path));
  }
  if (parts[0] != "v1") {
    return error(404, api_error::kUnknownVersion,
                 fmt::format("API version '{}' is not served; use /v1", parts[0]));
  }

  try {
    const std::size_t n = parts.size();
    if (n == 2 && parts[1] == "models") {
      if (method != "GET") return error(405, api_error::kMethodNotAllowed, "use GET");
      json list = json::array();
      for (const auto& m : cat.models) list.push_back(json_view::model(m));
      return reply(200, {{"models", list}});
    }
    if (n == 3 && parts[1] == "models") {
      if (method != "GET") return error(405, api_error::kMethodNotAllowed, "use GET");
      const ModelProfile* m = cat.find_model(parts[2]);
      if (!m) return error(404, api_error::kUnknownModel, fmt::format("unknown model '{}'", parts[2]));
      return reply(200, {{"model", json_view::model(*m)}});
    }
    if (n == 4 && parts[1] == "models" && parts[3] == "training") {
      if (method != "GET") return error(405, api_error::kMethodNotAllowed, "use GET");
      const ModelProfile* m = cat.find_model(parts[2]);
      if (!m) {
        return error(404, api_error::kUnknownModel, fmt::format("unknown model '{}'", parts[2]),
                     {{"suggestions", lookup_model(cat, parts[2]).candidates}});
      }
      const TrainingEstimate t =
          estimate_training(*m, cat.training, cat.factors, cat.find_country(m->provider_country));
      return reply(200, json_view::training(t));
    }
    if (n == 2 && parts[1] == "parse") {
      if (method != "POST") return error(405, api_error::kMethodNotAllowed, "use POST");
      const json req = parse_body(body);
      const auto description = string_field(req, "description");
      if (!description || description->find_first_not_of(" \t\r\n") == std::string::npos) {
        return error(400, api_error::kInvalidRequest, "field 'description' must be a non-empty string");
      }
      const ParseResult parsed = parse_scenario(*description, cat);
      if (!parsed.ok()) {
        return error(422, api_error::kParseFailed, "the description could not be turned into a scenario",
                     {{"diagnostics", json_view::diagnostics(parsed.diagnostics)}});
      }
      return reply(200, {{"scenario", json_view::scenario(*parsed.scenario)}});
    }
    if (n == 2 && parts[1] == "estimate") {
      if (method != "POST") return error(405, api_error::kMethodNotAllowed, "use POST");
      const json req = parse_body(body);
      EstimateRequest request;
      if (const auto it = req.find("scenario"); it != req.end()) {
        apply_fields(*it, request, false);
      } else {
        apply_fields(req, request, false);
      }
      if (const auto it = req.find("overrides"); it != req.end() && !it->is_null()) {
        apply_fields(*it, request, true);
      }
      if (request.model.empty()) return error(400, api_error::kInvalidRequest, "a model is required");
      try {
        return reply(200, json_view::estimate(run_estimate(cat, request)));
      } catch (const EstimateError& e) {
        return error(estimate_error_status(e.code()), estimate_error_code(e.code()), e.what(),
                     {{"suggestions", e.suggestions()}});
      }
    }
    if (n == 2 && parts[1] == "observatory") {
      if (method != "GET") return error(405, api_error::kMethodNotAllowed, "use GET");
      const auto it = query.find("format");
      const std::string format = it == query.end() ? "json" : it->second;
      if (format == "csv") {
        ApiResponse r;
        r.content_type = "text/csv; charset=utf-8";
        r.body = export_table(build_observatory(cat), TableFormat::kCsv);
        r.headers["X-Methodology-Version"] = version;
        return r;
      }
      if (format != "json") {
        return error(400, api_error::kBadFormat, fmt::format("unknown format '{}'; use json or csv", format));
      }
      return reply(200, json_view::observatory(build_observatory(cat)));
    }
    return error(404, api_error::kNotFound, fmt::format("no route for {}", path));
  } catch (const RequestError& e) {
    return error(e.status, e.code, e.message, e.details);
  } catch (const std::exception&) {
    return error(500, api_error::kInternal, "internal error");
  }
}

BindAddress BindAddress::parse(std::string_view text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument(fmt::format("bind address '{}' must look like HOST:PORT", text));
  }
  BindAddress out;
  out.host = std::string(text.substr(0, colon));
  if (out.host.empty()) out.host = "127.0.0.1";
  const bool host_ok = std::all_of(out.host.begin(), out.host.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-';
  });
  const std::string_view port = text.substr(colon + 1);
  int value = -1;
  const auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
  if (!host_ok || port.empty() || ec != std::errc() || ptr != port.data() + port.size() || value < 0 ||
      value > 65535) {
    throw InvalidArgument(fmt::format("bind address '{}' must look like HOST:PORT", text));
  }
  out.port = value;
  return out;
}

namespace {
std::mutex g_server_mutex;
httplib::Server* g_server = nullptr;
}  // namespace

bool serve(const Service& service, const BindAddress& bind, const std::function<void(int)>& on_ready) {
  httplib::Server server;
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const ApiResponse r = service.handle(req.method, req.path, query, req.body);
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, r.content_type);
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Put(".*", handler);
  server.Delete(".*", handler);
  server.Patch(".*", handler);
  int port = bind.port;
  if (port == 0) {
    port = server.bind_to_any_port(bind.host);
    if (port < 0) return false;
  } else if (!server.bind_to_port(bind.host, port)) {
    return false;
  }
  {
    std::lock_guard<std::mutex> lock(g_server_mutex);
    g_server = &server;
  }
  if (on_ready) on_ready(port);
  const bool ok = server.listen_after_bind();
  {
    std::lock_guard<std::mutex> lock(g_server_mutex);
    g_server = nullptr;
  }
  return ok;
}

void stop_server() {
  std::lock_guard<std::mutex> lock(g_server_mutex);
  if (g_server) g_server->stop();
}

}  // namespace impactscreen
