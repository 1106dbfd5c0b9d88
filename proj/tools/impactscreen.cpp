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

// impactscreen: command-line front end for the screening engine.
//
// Exit codes: 0 ok, 1 runtime error, 2 usage error, 3 catalog validation
// failure. Results go to stdout, diagnostics to stderr.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "impactscreen/catalog.hpp"
#include "impactscreen/display.hpp"
#include "impactscreen/estimator.hpp"
#include "impactscreen/reporter.hpp"
#include "impactscreen/scenario_parser.hpp"
#include "impactscreen/service.hpp"

#ifndef IMPACTSCREEN_DEFAULT_CATALOG_DIR
#define IMPACTSCREEN_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace {

using namespace impactscreen;

enum ExitCode : int { kOk = 0, kRuntime = 1, kUsage = 2, kValidation = 3 };

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : std::move(fallback);
}

std::string resolve_catalog_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  return env_or("IMPACT_CATALOG_DIR", IMPACTSCREEN_DEFAULT_CATALOG_DIR);
}

int report_catalog_error(const CatalogError& e) {
  std::cerr << "error: " << e.what() << '\n';
  return e.kind() == CatalogError::Kind::kMissingFile ? kRuntime : kValidation;
}

std::string provenance_tag(FieldProvenance p) { return fmt::format("[{}]", to_string(p)); }

std::string band_row(std::string_view label, const ScreeningBand& b, int decimals) {
  return fmt::format("  {:<26}{:>12}{:>12}{:>12}\n", label, display::fixed(b.low, decimals),
                     display::fixed(b.central, decimals), display::fixed(b.high, decimals));
}

std::string human_report(const EstimateResult& r) {
  const Scenario& s = r.scenario;
  std::string out;
  out += fmt::format("LLM inference screening estimate: {} ({})\n", r.model->display_name, r.model->id);
  out += "This is a screening estimate, not an audited declaration. Inference only; training,\n"
         "embodied impacts and application-side consumption are excluded.\n\n";

  out += "Scenario\n";
  auto field_line = [&](std::string_view label, const std::string& value, std::string_view f) {
    out += fmt::format("  {:<16}{:<30}{}\n", label, value, provenance_tag(s.provenance_of(f)));
  };
  field_line("model", s.model_id, field::kModel);
  field_line("request type", std::string(to_string(s.request_type)), field::kRequestType);
  field_line("token load",
             fmt::format("{} in / {} out", display::count(s.token_load.input_tokens()),
                         display::count(s.token_load.output_tokens())),
             field::kTokenLoad);
  field_line("volume",
             s.requests_per_month ? display::count(*s.requests_per_month) + " requests/month" : "not given",
             field::kRequestsPerMonth);
  field_line("country", s.country_code.value_or("-"), field::kCountry);
  out += '\n';

  out += fmt::format("Per request{:>27}{:>12}{:>12}\n", "low", "central", "high");
  out += band_row("energy (Wh/request)", r.inference.energy_wh, display::kInferenceEnergyDecimals);
  out += band_row("carbon (gCO2e/request)", r.inference.carbon_g, display::kInferenceCarbonDecimals);
  if (r.annual) {
    out += fmt::format("\nAnnualized ({} requests/year)\n", display::count(r.annual->requests_per_year));
    out += band_row("energy (kWh/year)", r.annual->annual_energy_kwh, display::kAnnualDecimals);
    out += band_row(fmt::format("carbon ({})", to_string(r.annual->annual_carbon.unit)), r.annual->annual_carbon,
                    display::kAnnualDecimals);
  }
  out += "\nAssumptions ledger\n";
  for (const auto& a : r.inference.assumptions) {
    out += fmt::format("  [{:<8}] {} = {}", to_string(a.provenance), a.name, a.value);
    if (!a.note.empty()) out += fmt::format("  ({})", a.note);
    out += '\n';
  }
  return out;
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    std::cerr << "error[" << to_string(d.code) << "]: " << d.message << '\n';
    for (const auto& s : d.suggestions) std::cerr << "  suggestion: " << s << '\n';
  }
}

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted = true; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Screening estimates of LLM inference and training energy and carbon"};
  app.require_subcommand(1);
  std::string catalog_flag;
  app.add_option("--catalog", catalog_flag, "Catalog bundle directory (default: $IMPACT_CATALOG_DIR)");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Per-request and annualized inference screening estimate");
  std::string model, describe, country;
  std::optional<double> in_tokens, out_tokens, per_month;
  bool estimate_json = false;
  estimate->add_option("--model", model, "Model id or name");
  estimate->add_option("--describe", describe, "Natural-language feature description");
  estimate->add_option("--in", in_tokens, "Input tokens per request");
  estimate->add_option("--out", out_tokens, "Output tokens per request");
  estimate->add_option("--per-month", per_month, "Requests per month");
  estimate->add_option("--country", country, "ISO 3166-1 alpha-2 country code");
  estimate->add_flag("--json", estimate_json, "Emit the API response JSON");

  // parse
  auto* parse = app.add_subcommand("parse", "Extract a scenario from a description");
  std::string parse_text;
  bool parse_json = false;
  parse->add_option("description", parse_text, "Feature description")->required();
  parse->add_flag("--json", parse_json, "Emit the API response JSON");

  // observatory
  auto* observatory = app.add_subcommand("observatory", "Standardized comparison table across the catalog");
  std::string format = "table";
  std::string output;
  observatory->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  observatory->add_option("--output", output, "Write to PATH instead of stdout");

  // validate
  auto* validate = app.add_subcommand("validate", "Load and validate a catalog bundle");
  std::string validate_dir;
  validate->add_option("--catalog", validate_dir, "Catalog bundle directory");

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON API");
  std::string bind = env_or("IMPACT_BIND_ADDR", "127.0.0.1:8080");
  serve_cmd->add_option("--bind", bind, "HOST:PORT (default: $IMPACT_BIND_ADDR or 127.0.0.1:8080)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (validate->parsed()) {
    const std::string dir = resolve_catalog_dir(!validate_dir.empty() ? validate_dir : catalog_flag);
    try {
      const Catalog cat = load_catalog(dir);
      std::cout << fmt::format("catalog OK: {} models, {} country mixes, methodology {}\n", cat.models.size(),
                               cat.countries.size(), cat.methodology_version());
      return kOk;
    } catch (const CatalogError& e) {
      return report_catalog_error(e);
    }
  }

  if (serve_cmd->parsed()) {
    BindAddress address;
    try {
      address = BindAddress::parse(bind);
    } catch (const InvalidArgument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    std::shared_ptr<const Catalog> cat;
    try {
      cat = std::make_shared<const Catalog>(load_catalog(resolve_catalog_dir(catalog_flag)));
    } catch (const CatalogError& e) {
      return report_catalog_error(e);
    }
    const Service service(cat);
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::atomic<bool> done{false};
    std::thread watcher([&] {
      while (!done) {
        if (g_interrupted) {
          stop_server();
          break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
    });
    const bool ok = impactscreen::serve(service, address, [&](int port) {
      std::cerr << fmt::format("serving /v1 on {}:{}\n", address.host, port);
    });
    done = true;
    watcher.join();
    if (!ok && !g_interrupted) {
      std::cerr << fmt::format("error: cannot listen on {}:{}\n", address.host, address.port);
      return kRuntime;
    }
    return kOk;
  }

  Catalog cat;
  try {
    cat = load_catalog(resolve_catalog_dir(catalog_flag));
  } catch (const CatalogError& e) {
    return report_catalog_error(e);
  }

  if (parse->parsed()) {
    const ParseResult result = parse_scenario(parse_text, cat);
    if (!result.ok()) {
      if (parse_json) {
        nlohmann::json body = error_body(api_error::kParseFailed, "the description could not be turned into a scenario",
                                         {{"diagnostics", json_view::diagnostics(result.diagnostics)}});
        body["methodology_version"] = cat.methodology_version();
        std::cout << body.dump(2) << '\n';
      }
      print_diagnostics(result.diagnostics);
      return kRuntime;
    }
    if (parse_json) {
      nlohmann::json body = {{"scenario", json_view::scenario(*result.scenario)},
                             {"methodology_version", cat.methodology_version()}};
      std::cout << body.dump(2) << '\n';
    } else {
      std::cout << render_scenario(*result.scenario) << '\n';
    }
    return kOk;
  }

  if (observatory->parsed()) {
    const auto rows = build_observatory(cat);
    std::string text;
    if (format == "json") {
      nlohmann::json body = json_view::observatory(rows);
      body["methodology_version"] = cat.methodology_version();
      text = body.dump(2) + "\n";
    } else {
      text = export_table(rows, *table_format_from_string(format));
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << text)) {
        std::cerr << "error: cannot write " << output << '\n';
        return kRuntime;
      }
    }
    return kOk;
  }

  // estimate
  if (describe.empty() && model.empty()) {
    std::cerr << "error: estimate needs --model or --describe\n";
    return kUsage;
  }
  EstimateRequest request;
  if (!describe.empty()) {
    const ParseResult parsed = parse_scenario(describe, cat);
    if (parsed.ok()) {
      request = request_from_scenario(*parsed.scenario);
    } else {
      print_diagnostics(parsed.diagnostics);
      if (model.empty()) return kRuntime;
      std::cerr << "note: falling back to command-line flags\n";
    }
  }
  auto mark = [&](std::string_view f) { request.field_provenance[std::string(f)] = FieldProvenance::kExplicit; };
  if (!model.empty()) {
    request.model = model;
    mark(field::kModel);
  }
  if (in_tokens) {
    request.input_tokens = in_tokens;
    mark(field::kTokenLoad);
  }
  if (out_tokens) {
    request.output_tokens = out_tokens;
    mark(field::kTokenLoad);
  }
  if (per_month) {
    request.requests_per_month = per_month;
    mark(field::kRequestsPerMonth);
  }
  if (!country.empty()) {
    request.country = country;
    mark(field::kCountry);
  }

  try {
    const EstimateResult result = run_estimate(cat, request);
    if (estimate_json) {
      nlohmann::json body = json_view::estimate(result);
      body["methodology_version"] = cat.methodology_version();
      std::cout << body.dump(2) << '\n';
    } else {
      std::cout << human_report(result);
    }
  } catch (const EstimateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& s : e.suggestions()) std::cerr << "  suggestion: " << s << '\n';
    return kRuntime;
  }
  return kOk;
}
