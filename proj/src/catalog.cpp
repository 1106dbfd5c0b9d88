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

#include "impactscreen/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <utility>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

namespace impactscreen {
namespace {

using Kind = CatalogError::Kind;

// Enum <-> text tables. Order matches the enum declarations.
template <typename E>
struct EnumNames;

template <>
struct EnumNames<ContextClass> {
  static constexpr std::pair<ContextClass, std::string_view> kValues[] = {
      {ContextClass::kShort, "short"},
      {ContextClass::kStandard, "standard"},
      {ContextClass::kLong, "long"},
      {ContextClass::kVeryLong, "very_long"}};
};
template <>
struct EnumNames<ServingMode> {
  static constexpr std::pair<ServingMode, std::string_view> kValues[] = {
      {ServingMode::kDedicated, "dedicated"},
      {ServingMode::kSharedHosted, "shared_hosted"},
      {ServingMode::kEdge, "edge"}};
};
template <>
struct EnumNames<Modality> {
  static constexpr std::pair<Modality, std::string_view> kValues[] = {
      {Modality::kTextOnly, "text_only"}, {Modality::kMultimodal, "multimodal"}};
};
template <>
struct EnumNames<ArchNote> {
  static constexpr std::pair<ArchNote, std::string_view> kValues[] = {
      {ArchNote::kDense, "dense"},
      {ArchNote::kMoeHybrid, "moe_hybrid"},
      {ArchNote::kUnknown, "unknown"}};
};
template <>
struct EnumNames<TrainingRegime> {
  static constexpr std::pair<TrainingRegime, std::string_view> kValues[] = {
      {TrainingRegime::kFoundationPretraining, "foundation_pretraining"},
      {TrainingRegime::kContinuedPretraining, "continued_pretraining"},
      {TrainingRegime::kDistilled, "distilled"}};
};
template <>
struct EnumNames<HardwareClass> {
  static constexpr std::pair<HardwareClass, std::string_view> kValues[] = {
      {HardwareClass::kFrontierAccelerator, "frontier_accelerator"},
      {HardwareClass::kStandardAccelerator, "standard_accelerator"},
      {HardwareClass::kUnknown, "unknown"}};
};
template <>
struct EnumNames<FactorKind> {
  static constexpr std::pair<FactorKind, std::string_view> kValues[] = {
      {FactorKind::kCtx, "ctx"},   {FactorKind::kSrv, "srv"},         {FactorKind::kMod, "mod"},
      {FactorKind::kArch, "arch"}, {FactorKind::kReg, "reg"},         {FactorKind::kArchTr, "arch_tr"},
      {FactorKind::kHw, "hw"}};
};
template <>
struct EnumNames<RequestType> {
  static constexpr std::pair<RequestType, std::string_view> kValues[] = {
      {RequestType::kChat, "chat"},
      {RequestType::kRetrieval, "retrieval"},
      {RequestType::kSummarization, "summarization"},
      {RequestType::kGeneration, "generation"},
      {RequestType::kGeneric, "generic"}};
};

template <typename E>
std::string_view enum_name(E v) {
  for (const auto& [value, name] : EnumNames<E>::kValues) {
    if (value == v) return name;
  }
  return "?";
}

template <typename E>
std::optional<E> enum_from(std::string_view s) {
  for (const auto& [value, name] : EnumNames<E>::kValues) {
    if (name == s) return value;
  }
  return std::nullopt;
}

template <typename E>
std::vector<std::string> enum_names() {
  std::vector<std::string> out;
  for (const auto& entry : EnumNames<E>::kValues) out.emplace_back(entry.second);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Where a value sits in the bundle, for error messages.
struct Where {
  std::string file;
  std::string record;

  std::string at(std::string_view field) const {
    if (record.empty()) return fmt::format("{}: field '{}'", file, field);
    return fmt::format("{}: record '{}': field '{}'", file, record, field);
  }
};

YAML::Node require(const YAML::Node& node, std::string_view key, const Where& where) {
  const YAML::Node child = node[std::string(key)];
  if (!child) throw CatalogError(Kind::kSchema, where.at(key) + " is missing");
  return child;
}

double as_double(const YAML::Node& node, std::string_view key, const Where& where) {
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw CatalogError(Kind::kSchema, where.at(key) + " is not a number");
  }
}

std::string as_string(const YAML::Node& node, std::string_view key, const Where& where) {
  if (!node.IsScalar()) throw CatalogError(Kind::kSchema, where.at(key) + " is not text");
  return node.as<std::string>();
}

bool as_bool(const YAML::Node& node, std::string_view key, const Where& where) {
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    throw CatalogError(Kind::kSchema, where.at(key) + " is not a boolean");
  }
}

double require_double(const YAML::Node& node, std::string_view key, const Where& where) {
  return as_double(require(node, key, where), key, where);
}

std::string require_string(const YAML::Node& node, std::string_view key, const Where& where) {
  return as_string(require(node, key, where), key, where);
}

std::vector<std::string> string_list(const YAML::Node& node, std::string_view key,
                                     const Where& where) {
  std::vector<std::string> out;
  if (!node) return out;
  if (!node.IsSequence()) throw CatalogError(Kind::kSchema, where.at(key) + " is not a list");
  for (const auto& item : node) out.push_back(as_string(item, key, where));
  return out;
}

Triple as_triple(const YAML::Node& node, std::string_view key, const Where& where) {
  if (!node.IsSequence() || node.size() != 3) {
    throw CatalogError(Kind::kSchema, where.at(key) + " must be a [low, central, high] list");
  }
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t.v[i] = as_double(node[i], key, where);
  return t;
}

template <typename E>
E require_enum(const YAML::Node& node, std::string_view key, const Where& where) {
  const std::string text = require_string(node, key, where);
  if (auto v = enum_from<E>(text)) return *v;
  throw CatalogError(Kind::kSchema, fmt::format("{} has unknown value '{}' (expected one of: {})",
                                                where.at(key), text, join(enum_names<E>(), ", ")));
}

template <typename E>
E optional_enum(const YAML::Node& node, std::string_view key, const Where& where, E fallback) {
  if (!node[std::string(key)]) return fallback;
  return require_enum<E>(node, key, where);
}

YAML::Node read_file(const std::filesystem::path& path, bool required) {
  if (!std::filesystem::exists(path)) {
    if (!required) return YAML::Node();
    throw CatalogError(Kind::kMissingFile, fmt::format("missing catalog file: {}", path.string()));
  }
  YAML::Node root;
  try {
    root = YAML::LoadFile(path.string());
  } catch (const YAML::Exception& e) {
    throw CatalogError(Kind::kSchema,
                       fmt::format("{}: malformed YAML: {}", path.filename().string(), e.what()));
  }
  const Where where{path.filename().string(), ""};
  if (!root.IsMap()) throw CatalogError(Kind::kSchema, where.file + ": top level must be a mapping");
  const int version = static_cast<int>(require_double(root, "format_version", where));
  if (version != kCatalogFormatVersion) {
    throw CatalogError(Kind::kUnknownVersion,
                       fmt::format("{}: unsupported format_version {} (this build reads {})",
                                   where.file, version, kCatalogFormatVersion));
  }
  return root;
}

AnchorConstants parse_inference_anchor(const YAML::Node& node) {
  const Where w{"anchors.yaml", "inference"};
  AnchorConstants a;
  a.anchor_energy_wh = require_double(node, "anchor_energy_wh", w);
  a.anchor_active_params_b = require_double(node, "anchor_active_params_b", w);
  a.output_token_weight = require_double(node, "output_token_weight", w);
  a.ref_input_tokens = require_double(node, "ref_input_tokens", w);
  a.ref_output_tokens = require_double(node, "ref_output_tokens", w);
  a.alpha = as_triple(require(node, "alpha", w), "alpha", w);
  a.beta = as_triple(require(node, "beta", w), "beta", w);
  return a;
}

TrainingAnchor parse_training_anchor(const YAML::Node& node, const AnchorConstants& inference) {
  const Where w{"anchors.yaml", "training"};
  TrainingAnchor t;
  t.anchor_energy_gwh = require_double(node, "anchor_energy_gwh", w);
  t.anchor_params_b = require_double(node, "anchor_params_b", w);
  t.anchor_tokens_b = require_double(node, "anchor_tokens_b", w);
  t.alpha = node["alpha"] ? as_triple(node["alpha"], "alpha", w) : inference.alpha;
  t.beta = node["beta"] ? as_triple(node["beta"], "beta", w) : inference.beta;
  if (node["fitted"]) t.fitted = as_bool(node["fitted"], "fitted", w);
  if (node["source_note"]) t.source_note = as_string(node["source_note"], "source_note", w);
  return t;
}

ModelProfile parse_model(const YAML::Node& node, std::size_t index) {
  Where w{"models.yaml", fmt::format("#{}", index)};
  if (!node.IsMap()) throw CatalogError(Kind::kSchema, w.file + ": record " + w.record + " is not a mapping");
  ModelProfile m;
  m.id = require_string(node, "id", w);
  w.record = m.id;
  m.display_name = require_string(node, "display_name", w);
  m.aliases = string_list(node["aliases"], "aliases", w);
  m.raw_active_params_b = require_double(node, "raw_active_params_b", w);
  if (node["assumed"]) m.assumed = as_bool(node["assumed"], "assumed", w);
  m.context_class = require_enum<ContextClass>(node, "context_class", w);
  m.serving_mode = require_enum<ServingMode>(node, "serving_mode", w);
  m.modality = require_enum<Modality>(node, "modality", w);
  m.arch_note = require_enum<ArchNote>(node, "arch_note", w);
  m.provider_country = require_string(node, "provider_country", w);
  if (node["training_tokens_b"]) {
    m.training_tokens_b = as_double(node["training_tokens_b"], "training_tokens_b", w);
  }
  m.training_regime = optional_enum(node, "training_regime", w, TrainingRegime::kFoundationPretraining);
  m.hardware_class = require_enum<HardwareClass>(node, "hardware_class", w);
  if (const YAML::Node fo = node["factor_overrides"]) {
    FactorOverrides o;
    if (fo["inference"]) o.inference = as_triple(fo["inference"], "factor_overrides.inference", w);
    if (fo["training"]) o.training = as_triple(fo["training"], "factor_overrides.training", w);
    if (fo["fitted"]) o.fitted = as_bool(fo["fitted"], "factor_overrides.fitted", w);
    m.factor_overrides = o;
  }
  return m;
}

FactorTable parse_factors(const YAML::Node& node) {
  const Where w{"factors.yaml", ""};
  FactorTable table;
  const YAML::Node kinds = require(node, "factors", w);
  if (!kinds.IsMap()) throw CatalogError(Kind::kSchema, w.at("factors") + " must be a mapping");
  for (const auto& entry : kinds) {
    const std::string kind_name = entry.first.as<std::string>();
    const auto kind = enum_from<FactorKind>(kind_name);
    if (!kind) {
      throw CatalogError(Kind::kSchema,
                         fmt::format("factors.yaml: unknown factor kind '{}' (expected one of: {})",
                                     kind_name, join(enum_names<FactorKind>(), ", ")));
    }
    const Where kw{"factors.yaml", kind_name};
    for (const auto& cat : entry.second) {
      const std::string category = cat.first.as<std::string>();
      table.set(*kind, category, as_triple(cat.second, category, kw));
    }
  }
  return table;
}

std::vector<CountryMix> parse_countries(const YAML::Node& node) {
  const Where w{"countries.yaml", ""};
  std::vector<CountryMix> out;
  const YAML::Node list = require(node, "countries", w);
  std::size_t i = 0;
  for (const auto& item : list) {
    Where iw{"countries.yaml", fmt::format("#{}", i++)};
    CountryMix c;
    c.country_code = require_string(item, "code", iw);
    iw.record = c.country_code;
    if (item["name"]) c.name = as_string(item["name"], "name", iw);
    c.carbon_intensity_g_per_kwh = require_double(item, "carbon_intensity_g_per_kwh", iw);
    if (item["source_note"]) c.source_note = as_string(item["source_note"], "source_note", iw);
    out.push_back(std::move(c));
  }
  return out;
}

Lexicon parse_lexicon(const YAML::Node& node) {
  Lexicon lex;
  const Where w{"lexicon.yaml", ""};
  std::size_t i = 0;
  for (const auto& item : require(node, "request_types", w)) {
    Where iw{"lexicon.yaml", fmt::format("request_types#{}", i++)};
    Lexicon::RequestTypeEntry e;
    const std::string type = require_string(item, "type", iw);
    const auto parsed = request_type_from_string(type);
    if (!parsed) throw CatalogError(Kind::kSchema, fmt::format("{} has unknown value '{}'", iw.at("type"), type));
    e.type = *parsed;
    iw.record = type;
    e.keywords = string_list(item["keywords"], "keywords", iw);
    const YAML::Node tokens = require(item, "default_tokens", iw);
    e.default_input_tokens = require_double(tokens, "input", iw);
    e.default_output_tokens = require_double(tokens, "output", iw);
    if (item["fitted"]) e.fitted = as_bool(item["fitted"], "fitted", iw);
    lex.request_types.push_back(std::move(e));
  }
  i = 0;
  for (const auto& item : require(node, "periods", w)) {
    const Where iw{"lexicon.yaml", fmt::format("periods#{}", i++)};
    Lexicon::PeriodEntry p;
    p.phrases = string_list(require(item, "phrases", iw), "phrases", iw);
    p.per_month = require_double(item, "per_month", iw);
    lex.periods.push_back(std::move(p));
  }
  lex.volume_nouns = string_list(node["volume_nouns"], "volume_nouns", w);
  i = 0;
  if (const YAML::Node countries = node["countries"]) {
    for (const auto& item : countries) {
      const Where iw{"lexicon.yaml", fmt::format("countries#{}", i++)};
      Lexicon::CountryEntry c;
      c.code = require_string(item, "code", iw);
      c.names = string_list(item["names"], "names", iw);
      lex.countries.push_back(std::move(c));
    }
  }
  return lex;
}

bool is_slug(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '-';
  });
}

void require_positive(double value, const std::string& what) {
  if (!(value > 0.0)) {
    throw CatalogError(Kind::kNonPositive, fmt::format("{} must be > 0 (got {})", what, value));
  }
}

void require_positive(const Triple& t, const std::string& what) {
  for (auto c : kAllCases) require_positive(t[c], fmt::format("{} [{}]", what, to_string(c)));
}

void require_increasing(const Triple& t, const std::string& what) {
  if (!(t.low() < t.central() && t.central() < t.high())) {
    throw CatalogError(Kind::kSchema, fmt::format("{} must increase strictly from low to high", what));
  }
}

// Categories each kind must cover, with the neutral one first.
std::vector<std::pair<FactorKind, std::vector<std::string>>> required_categories() {
  auto arch_tr = enum_names<ArchNote>();
  for (auto& m : enum_names<Modality>()) arch_tr.push_back(m);
  return {
      {FactorKind::kCtx, enum_names<ContextClass>()},
      {FactorKind::kSrv, enum_names<ServingMode>()},
      {FactorKind::kMod, enum_names<Modality>()},
      {FactorKind::kArch, enum_names<ArchNote>()},
      {FactorKind::kReg, enum_names<TrainingRegime>()},
      {FactorKind::kArchTr, arch_tr},
      {FactorKind::kHw, enum_names<HardwareClass>()},
  };
}

std::vector<std::string_view> neutral_categories(FactorKind kind) {
  switch (kind) {
    case FactorKind::kCtx: return {"standard"};
    case FactorKind::kSrv: return {"dedicated"};
    case FactorKind::kMod: return {"text_only"};
    case FactorKind::kArch: return {"dense"};
    case FactorKind::kReg: return {"foundation_pretraining"};
    case FactorKind::kArchTr: return {"dense", "text_only"};
    case FactorKind::kHw: return {"standard_accelerator"};
  }
  return {};
}

// Which model (if any) uses `category` of `kind`; for error messages.
std::string first_user(const Catalog& catalog, FactorKind kind, std::string_view category) {
  for (const auto& m : catalog.models) {
    bool uses = false;
    switch (kind) {
      case FactorKind::kCtx: uses = to_string(m.context_class) == category; break;
      case FactorKind::kSrv: uses = to_string(m.serving_mode) == category; break;
      case FactorKind::kMod: uses = to_string(m.modality) == category; break;
      case FactorKind::kArch: uses = to_string(m.arch_note) == category; break;
      case FactorKind::kReg: uses = to_string(m.training_regime) == category; break;
      case FactorKind::kArchTr:
        uses = to_string(m.arch_note) == category || to_string(m.modality) == category;
        break;
      case FactorKind::kHw: uses = to_string(m.hardware_class) == category; break;
    }
    if (uses) return m.id;
  }
  return {};
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

YAML::Node triple_node(const Triple& t) {
  YAML::Node n(YAML::NodeType::Sequence);
  for (double x : t.v) n.push_back(x);
  n.SetStyle(YAML::EmitterStyle::Flow);
  return n;
}

void write_node(const YAML::Node& node, const std::filesystem::path& path) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << node;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CatalogError(Kind::kMissingFile, "cannot write " + path.string());
  file << out.c_str() << '\n';
}

}  // namespace

std::string_view to_string(ContextClass v) { return enum_name(v); }
std::string_view to_string(ServingMode v) { return enum_name(v); }
std::string_view to_string(Modality v) { return enum_name(v); }
std::string_view to_string(ArchNote v) { return enum_name(v); }
std::string_view to_string(TrainingRegime v) { return enum_name(v); }
std::string_view to_string(HardwareClass v) { return enum_name(v); }
std::string_view to_string(FactorKind k) { return enum_name(k); }
std::string_view to_string(RequestType t) { return enum_name(t); }

std::optional<RequestType> request_type_from_string(std::string_view s) {
  return enum_from<RequestType>(s);
}

void FactorTable::set(FactorKind kind, std::string category, Triple multipliers) {
  entries_[kind][std::move(category)] = multipliers;
}

const Triple* FactorTable::find(FactorKind kind, std::string_view category) const {
  const auto k = entries_.find(kind);
  if (k == entries_.end()) return nullptr;
  const auto c = k->second.find(category);
  return c == k->second.end() ? nullptr : &c->second;
}

const Triple& FactorTable::at(FactorKind kind, std::string_view category) const {
  if (const Triple* t = find(kind, category)) return *t;
  throw CatalogError(Kind::kCoverage, fmt::format("factor table has no '{}' entry for category '{}'",
                                                  to_string(kind), category));
}

bool FactorTable::erase(FactorKind kind, std::string_view category) {
  const auto k = entries_.find(kind);
  if (k == entries_.end()) return false;
  const auto c = k->second.find(category);
  if (c == k->second.end()) return false;
  k->second.erase(c);
  return true;
}

Lexicon Lexicon::minimal() {
  Lexicon lex;
  lex.request_types.push_back({RequestType::kGeneric, {}, 1000.0, 550.0, false});
  lex.periods.push_back({{"per month", "a month", "monthly", "/month"}, 1.0});
  lex.periods.push_back({{"per day", "a day", "daily", "/day"}, 30.0});
  lex.volume_nouns = {"requests", "uses", "queries", "calls"};
  return lex;
}

const Lexicon::RequestTypeEntry& Lexicon::entry_for(RequestType t) const {
  for (const auto& e : request_types) {
    if (e.type == t) return e;
  }
  for (const auto& e : request_types) {
    if (e.type == RequestType::kGeneric) return e;
  }
  static const RequestTypeEntry kFallback{RequestType::kGeneric, {}, 1000.0, 550.0, false};
  return kFallback;
}

const CountryMix* Catalog::find_country(std::string_view code) const {
  for (const auto& c : countries) {
    if (c.country_code == code) return &c;
  }
  return nullptr;
}

const ModelProfile* Catalog::find_model(std::string_view id) const {
  for (const auto& m : models) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

std::string Catalog::methodology_version() const {
  // FNV-1a over a canonical rendering of the anchor constants.
  std::string canon = fmt::format(
      "{:.17g}|{:.17g}|{:.17g}|{:.17g}|{:.17g}", anchors.anchor_energy_wh,
      anchors.anchor_active_params_b, anchors.output_token_weight, anchors.ref_input_tokens,
      anchors.ref_output_tokens);
  for (const Triple* t : {&anchors.alpha, &anchors.beta, &training.alpha, &training.beta}) {
    canon += fmt::format("|{:.17g},{:.17g},{:.17g}", t->low(), t->central(), t->high());
  }
  canon += fmt::format("|{:.17g}|{:.17g}|{:.17g}", training.anchor_energy_gwh,
                       training.anchor_params_b, training.anchor_tokens_b);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return fmt::format("{}-{:016x}", format_version, h);
}

Catalog load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw CatalogError(Kind::kMissingFile, fmt::format("catalog directory not found: {}", dir.string()));
  }
  Catalog catalog;
  const YAML::Node anchors = read_file(dir / "anchors.yaml", true);
  catalog.anchors = parse_inference_anchor(require(anchors, "inference", {"anchors.yaml", ""}));
  catalog.training = parse_training_anchor(require(anchors, "training", {"anchors.yaml", ""}),
                                           catalog.anchors);

  const YAML::Node models = read_file(dir / "models.yaml", true);
  const YAML::Node list = require(models, "models", {"models.yaml", ""});
  if (!list.IsSequence() && !list.IsNull()) {
    throw CatalogError(Kind::kSchema, "models.yaml: field 'models' must be a list");
  }
  std::size_t index = 0;
  for (const auto& item : list) catalog.models.push_back(parse_model(item, index++));

  catalog.factors = parse_factors(read_file(dir / "factors.yaml", true));
  catalog.countries = parse_countries(read_file(dir / "countries.yaml", true));

  const YAML::Node lexicon = read_file(dir / "lexicon.yaml", false);
  catalog.lexicon = lexicon.IsMap() ? parse_lexicon(lexicon) : Lexicon::minimal();

  validate_catalog(catalog);
  return catalog;
}

void validate_catalog(const Catalog& catalog) {
  const AnchorConstants& a = catalog.anchors;
  require_positive(a.anchor_energy_wh, "anchors.yaml: inference.anchor_energy_wh");
  require_positive(a.anchor_active_params_b, "anchors.yaml: inference.anchor_active_params_b");
  require_positive(a.output_token_weight, "anchors.yaml: inference.output_token_weight");
  require_positive(a.ref_input_tokens, "anchors.yaml: inference.ref_input_tokens");
  require_positive(a.ref_output_tokens, "anchors.yaml: inference.ref_output_tokens");
  require_positive(a.alpha, "anchors.yaml: inference.alpha");
  require_positive(a.beta, "anchors.yaml: inference.beta");
  require_increasing(a.alpha, "anchors.yaml: inference.alpha");
  require_increasing(a.beta, "anchors.yaml: inference.beta");

  const TrainingAnchor& t = catalog.training;
  require_positive(t.anchor_energy_gwh, "anchors.yaml: training.anchor_energy_gwh");
  require_positive(t.anchor_params_b, "anchors.yaml: training.anchor_params_b");
  require_positive(t.anchor_tokens_b, "anchors.yaml: training.anchor_tokens_b");
  require_positive(t.alpha, "anchors.yaml: training.alpha");
  require_positive(t.beta, "anchors.yaml: training.beta");
  require_increasing(t.alpha, "anchors.yaml: training.alpha");
  require_increasing(t.beta, "anchors.yaml: training.beta");

  std::set<std::string, std::less<>> country_codes;
  for (const auto& c : catalog.countries) {
    const std::string where = fmt::format("countries.yaml: record '{}'", c.country_code);
    if (c.country_code.size() != 2 || !std::isupper(static_cast<unsigned char>(c.country_code[0])) ||
        !std::isupper(static_cast<unsigned char>(c.country_code[1]))) {
      throw CatalogError(Kind::kSchema, where + ": code must be an ISO 3166-1 alpha-2 code");
    }
    if (!country_codes.insert(c.country_code).second) {
      throw CatalogError(Kind::kDuplicateId, fmt::format("countries.yaml: duplicate country code '{}'", c.country_code));
    }
    require_positive(c.carbon_intensity_g_per_kwh, where + ": carbon_intensity_g_per_kwh");
  }

  for (const auto& [kind, categories] : catalog.factors.entries()) {
    for (const auto& [category, trip] : categories) {
      require_positive(trip, fmt::format("factors.yaml: {}.{}", to_string(kind), category));
    }
  }
  for (const auto& [kind, categories] : required_categories()) {
    for (const auto& category : categories) {
      if (catalog.factors.find(kind, category)) continue;
      const std::string user = first_user(catalog, kind, category);
      throw CatalogError(
          Kind::kCoverage,
          user.empty()
              ? fmt::format("factors.yaml: kind '{}' has no entry for category '{}'", to_string(kind), category)
              : fmt::format("factors.yaml: kind '{}' has no entry for category '{}' (used by model '{}')",
                            to_string(kind), category, user));
    }
    for (std::string_view neutral : neutral_categories(kind)) {
      if (!(catalog.factors.at(kind, neutral) == Triple{})) {
        throw CatalogError(Kind::kSchema, fmt::format("factors.yaml: neutral category {}.{} must be [1, 1, 1]",
                                                      to_string(kind), neutral));
      }
    }
  }

  std::set<std::string, std::less<>> ids;
  for (const auto& m : catalog.models) {
    const std::string where = fmt::format("models.yaml: record '{}'", m.id);
    if (!is_slug(m.id)) {
      throw CatalogError(Kind::kSchema, where + ": id must be a lowercase slug");
    }
    if (!ids.insert(m.id).second) {
      throw CatalogError(Kind::kDuplicateId, fmt::format("models.yaml: duplicate model id '{}'", m.id));
    }
    require_positive(m.raw_active_params_b, where + ": raw_active_params_b");
    if (m.training_tokens_b) require_positive(*m.training_tokens_b, where + ": training_tokens_b");
    if (m.factor_overrides) {
      if (m.factor_overrides->inference) {
        require_positive(*m.factor_overrides->inference, where + ": factor_overrides.inference");
      }
      if (m.factor_overrides->training) {
        require_positive(*m.factor_overrides->training, where + ": factor_overrides.training");
      }
    }
    if (!country_codes.count(m.provider_country)) {
      throw CatalogError(Kind::kUnresolvedCountry,
                         fmt::format("{}: provider_country '{}' has no entry in countries.yaml", where,
                                     m.provider_country));
    }
  }

  const Lexicon& lex = catalog.lexicon;
  for (const auto& e : lex.request_types) {
    const std::string where = fmt::format("lexicon.yaml: request type '{}'", to_string(e.type));
    require_positive(e.default_input_tokens + e.default_output_tokens, where + ": default_tokens");
    if (e.default_input_tokens < 0 || e.default_output_tokens < 0) {
      throw CatalogError(Kind::kNonPositive, where + ": default_tokens must not be negative");
    }
  }
  for (const auto& p : lex.periods) require_positive(p.per_month, "lexicon.yaml: periods.per_month");
  for (const auto& c : lex.countries) {
    if (!country_codes.count(c.code)) {
      throw CatalogError(Kind::kUnresolvedCountry,
                         fmt::format("lexicon.yaml: country '{}' has no entry in countries.yaml", c.code));
    }
  }
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  YAML::Node anchors;
  anchors["format_version"] = catalog.format_version;
  YAML::Node inf;
  inf["anchor_energy_wh"] = catalog.anchors.anchor_energy_wh;
  inf["anchor_active_params_b"] = catalog.anchors.anchor_active_params_b;
  inf["output_token_weight"] = catalog.anchors.output_token_weight;
  inf["ref_input_tokens"] = catalog.anchors.ref_input_tokens;
  inf["ref_output_tokens"] = catalog.anchors.ref_output_tokens;
  inf["alpha"] = triple_node(catalog.anchors.alpha);
  inf["beta"] = triple_node(catalog.anchors.beta);
  anchors["inference"] = inf;
  YAML::Node tr;
  tr["anchor_energy_gwh"] = catalog.training.anchor_energy_gwh;
  tr["anchor_params_b"] = catalog.training.anchor_params_b;
  tr["anchor_tokens_b"] = catalog.training.anchor_tokens_b;
  tr["alpha"] = triple_node(catalog.training.alpha);
  tr["beta"] = triple_node(catalog.training.beta);
  tr["fitted"] = catalog.training.fitted;
  tr["source_note"] = catalog.training.source_note;
  anchors["training"] = tr;
  write_node(anchors, dir / "anchors.yaml");

  YAML::Node models;
  models["format_version"] = catalog.format_version;
  YAML::Node list(YAML::NodeType::Sequence);
  for (const auto& m : catalog.models) {
    YAML::Node n;
    n["id"] = m.id;
    n["display_name"] = m.display_name;
    if (!m.aliases.empty()) n["aliases"] = m.aliases;
    n["raw_active_params_b"] = m.raw_active_params_b;
    n["assumed"] = m.assumed;
    n["context_class"] = std::string(to_string(m.context_class));
    n["serving_mode"] = std::string(to_string(m.serving_mode));
    n["modality"] = std::string(to_string(m.modality));
    n["arch_note"] = std::string(to_string(m.arch_note));
    n["provider_country"] = m.provider_country;
    if (m.training_tokens_b) n["training_tokens_b"] = *m.training_tokens_b;
    n["training_regime"] = std::string(to_string(m.training_regime));
    n["hardware_class"] = std::string(to_string(m.hardware_class));
    if (m.factor_overrides) {
      YAML::Node fo;
      fo["fitted"] = m.factor_overrides->fitted;
      if (m.factor_overrides->inference) fo["inference"] = triple_node(*m.factor_overrides->inference);
      if (m.factor_overrides->training) fo["training"] = triple_node(*m.factor_overrides->training);
      n["factor_overrides"] = fo;
    }
    list.push_back(n);
  }
  models["models"] = list;
  write_node(models, dir / "models.yaml");

  YAML::Node factors;
  factors["format_version"] = catalog.format_version;
  YAML::Node kinds(YAML::NodeType::Map);
  for (const auto& [kind, categories] : catalog.factors.entries()) {
    YAML::Node cats(YAML::NodeType::Map);
    for (const auto& [category, trip] : categories) cats[category] = triple_node(trip);
    kinds[std::string(to_string(kind))] = cats;
  }
  factors["factors"] = kinds;
  write_node(factors, dir / "factors.yaml");

  YAML::Node countries;
  countries["format_version"] = catalog.format_version;
  YAML::Node clist(YAML::NodeType::Sequence);
  for (const auto& c : catalog.countries) {
    YAML::Node n;
    n["code"] = c.country_code;
    n["name"] = c.name;
    n["carbon_intensity_g_per_kwh"] = c.carbon_intensity_g_per_kwh;
    n["source_note"] = c.source_note;
    clist.push_back(n);
  }
  countries["countries"] = clist;
  write_node(countries, dir / "countries.yaml");

  YAML::Node lexicon;
  lexicon["format_version"] = catalog.format_version;
  YAML::Node types(YAML::NodeType::Sequence);
  for (const auto& e : catalog.lexicon.request_types) {
    YAML::Node n;
    n["type"] = std::string(to_string(e.type));
    n["keywords"] = YAML::Node(YAML::NodeType::Sequence);
    for (const auto& k : e.keywords) n["keywords"].push_back(k);
    n["default_tokens"]["input"] = e.default_input_tokens;
    n["default_tokens"]["output"] = e.default_output_tokens;
    n["fitted"] = e.fitted;
    types.push_back(n);
  }
  lexicon["request_types"] = types;
  YAML::Node periods(YAML::NodeType::Sequence);
  for (const auto& p : catalog.lexicon.periods) {
    YAML::Node n;
    n["phrases"] = p.phrases;
    n["per_month"] = p.per_month;
    periods.push_back(n);
  }
  lexicon["periods"] = periods;
  lexicon["volume_nouns"] = YAML::Node(YAML::NodeType::Sequence);
  for (const auto& v : catalog.lexicon.volume_nouns) lexicon["volume_nouns"].push_back(v);
  YAML::Node lc(YAML::NodeType::Sequence);
  for (const auto& c : catalog.lexicon.countries) {
    YAML::Node n;
    n["code"] = c.code;
    n["names"] = c.names;
    lc.push_back(n);
  }
  lexicon["countries"] = lc;
  write_node(lexicon, dir / "lexicon.yaml");
}

std::string normalize_name(std::string_view s) {
  std::string out;
  for (unsigned char ch : s) {
    if (std::isalnum(ch)) out.push_back(static_cast<char>(std::tolower(ch)));
  }
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

LookupResult lookup_model(const Catalog& catalog, std::string_view query) {
  LookupResult result;
  for (const auto& m : catalog.models) {
    if (m.id == query) {
      result.status = LookupStatus::kFound;
      result.profile = &m;
      result.tier = MatchTier::kExactId;
      return result;
    }
  }

  // Each tier collects distinct models; one hit resolves, several are ambiguous.
  auto resolve = [&](MatchTier tier, auto&& matches) -> bool {
    std::vector<const ModelProfile*> hits;
    for (const auto& m : catalog.models) {
      if (matches(m)) hits.push_back(&m);
    }
    if (hits.empty()) return false;
    if (hits.size() == 1) {
      result.status = LookupStatus::kFound;
      result.profile = hits.front();
    } else {
      result.status = LookupStatus::kAmbiguous;
      for (const auto* h : hits) result.candidates.push_back(h->id);
    }
    result.tier = tier;
    return true;
  };

  auto names_of = [](const ModelProfile& m) {
    std::vector<std::string> names{m.id, m.display_name};
    names.insert(names.end(), m.aliases.begin(), m.aliases.end());
    return names;
  };

  const std::string lower = to_lower(query);
  if (resolve(MatchTier::kName, [&](const ModelProfile& m) {
        for (const auto& n : names_of(m)) {
          if (to_lower(n) == lower) return true;
        }
        return false;
      })) {
    return result;
  }

  const std::string norm = normalize_name(query);
  if (!norm.empty()) {
    if (resolve(MatchTier::kNormalized, [&](const ModelProfile& m) {
          for (const auto& n : names_of(m)) {
            if (normalize_name(n) == norm) return true;
          }
          return false;
        })) {
      return result;
    }
    if (resolve(MatchTier::kPrefix, [&](const ModelProfile& m) {
          for (const auto& n : names_of(m)) {
            if (normalize_name(n).starts_with(norm)) return true;
          }
          return false;
        })) {
      return result;
    }
  }

  std::vector<std::pair<std::size_t, const ModelProfile*>> ranked;
  for (const auto& m : catalog.models) {
    std::size_t best = std::string::npos;
    for (const auto& n : names_of(m)) best = std::min(best, edit_distance(norm, normalize_name(n)));
    ranked.emplace_back(best, &m);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second->id < y.second->id;
  });
  for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) result.candidates.push_back(ranked[i].second->id);
  result.status = LookupStatus::kNotFound;
  return result;
}

}  // namespace impactscreen
