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

#ifndef IMPACTSCREEN_CATALOG_HPP_
#define IMPACTSCREEN_CATALOG_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "impactscreen/types.hpp"

namespace impactscreen {

inline constexpr int kCatalogFormatVersion = 1;

/// Inference anchor and screening exponents shared by every estimate.
struct AnchorConstants {
  double anchor_energy_wh = 0.24;
  double anchor_active_params_b = 180.0;
  double output_token_weight = 1.8;
  double ref_input_tokens = 1000.0;
  double ref_output_tokens = 550.0;
  Triple alpha{{0.85, 0.95, 1.05}};
  Triple beta{{0.85, 0.92, 1.0}};

  /// Weighted volume of the standardized request.
  double ref_volume() const {
    return ref_input_tokens + output_token_weight * ref_output_tokens;
  }

  friend bool operator==(const AnchorConstants&, const AnchorConstants&) = default;
};

/// Anchor for the training proxy. Exponents default to the inference ones.
struct TrainingAnchor {
  double anchor_energy_gwh = 0.0;
  double anchor_params_b = 0.0;
  double anchor_tokens_b = 0.0;
  Triple alpha{{0.85, 0.95, 1.05}};
  Triple beta{{0.85, 0.92, 1.0}};
  bool fitted = false;
  std::string source_note;

  friend bool operator==(const TrainingAnchor&, const TrainingAnchor&) = default;
};

enum class ContextClass { kShort, kStandard, kLong, kVeryLong };
enum class ServingMode { kDedicated, kSharedHosted, kEdge };
enum class Modality { kTextOnly, kMultimodal };
enum class ArchNote { kDense, kMoeHybrid, kUnknown };
enum class TrainingRegime { kFoundationPretraining, kContinuedPretraining, kDistilled };
enum class HardwareClass { kFrontierAccelerator, kStandardAccelerator, kUnknown };

std::string_view to_string(ContextClass v);
std::string_view to_string(ServingMode v);
std::string_view to_string(Modality v);
std::string_view to_string(ArchNote v);
std::string_view to_string(TrainingRegime v);
std::string_view to_string(HardwareClass v);

/// Per-case multipliers that replace the factor-table product.
struct FactorOverrides {
  std::optional<Triple> inference;
  std::optional<Triple> training;
  bool fitted = false;

  friend bool operator==(const FactorOverrides&, const FactorOverrides&) = default;
};

struct ModelProfile {
  std::string id;
  std::string display_name;
  std::vector<std::string> aliases;
  double raw_active_params_b = 0.0;
  /// Parameter count is a screening placeholder, not a disclosed value.
  bool assumed = false;
  ContextClass context_class = ContextClass::kStandard;
  ServingMode serving_mode = ServingMode::kDedicated;
  Modality modality = Modality::kTextOnly;
  ArchNote arch_note = ArchNote::kDense;
  std::string provider_country;
  std::optional<double> training_tokens_b;
  TrainingRegime training_regime = TrainingRegime::kFoundationPretraining;
  HardwareClass hardware_class = HardwareClass::kStandardAccelerator;
  std::optional<FactorOverrides> factor_overrides;

  friend bool operator==(const ModelProfile&, const ModelProfile&) = default;
};

enum class FactorKind { kCtx, kSrv, kMod, kArch, kReg, kArchTr, kHw };

std::string_view to_string(FactorKind k);

/// (kind, category) -> per-case multiplier.
class FactorTable {
 public:
  using Categories = std::map<std::string, Triple, std::less<>>;

  void set(FactorKind kind, std::string category, Triple multipliers);

  /// Throws CatalogError (kCoverage) if the entry is missing.
  const Triple& at(FactorKind kind, std::string_view category) const;
  const Triple* find(FactorKind kind, std::string_view category) const;
  bool erase(FactorKind kind, std::string_view category);

  const std::map<FactorKind, Categories>& entries() const { return entries_; }

  friend bool operator==(const FactorTable&, const FactorTable&) = default;

 private:
  std::map<FactorKind, Categories> entries_;
};

struct CountryMix {
  std::string country_code;
  std::string name;
  double carbon_intensity_g_per_kwh = 0.0;
  std::string source_note;

  friend bool operator==(const CountryMix&, const CountryMix&) = default;
};

enum class RequestType { kChat, kRetrieval, kSummarization, kGeneration, kGeneric };

std::string_view to_string(RequestType t);
std::optional<RequestType> request_type_from_string(std::string_view s);

/// Parser vocabulary. Lives in the bundle so it can be audited as data.
struct Lexicon {
  struct RequestTypeEntry {
    RequestType type = RequestType::kGeneric;
    std::vector<std::string> keywords;
    double default_input_tokens = 1000.0;
    double default_output_tokens = 550.0;
    bool fitted = false;
    friend bool operator==(const RequestTypeEntry&, const RequestTypeEntry&) = default;
  };
  struct PeriodEntry {
    std::vector<std::string> phrases;
    double per_month = 1.0;
    friend bool operator==(const PeriodEntry&, const PeriodEntry&) = default;
  };
  struct CountryEntry {
    std::string code;
    std::vector<std::string> names;
    friend bool operator==(const CountryEntry&, const CountryEntry&) = default;
  };

  std::vector<RequestTypeEntry> request_types;
  std::vector<PeriodEntry> periods;
  std::vector<std::string> volume_nouns;
  std::vector<CountryEntry> countries;

  /// Vocabulary used when a bundle ships no lexicon file.
  static Lexicon minimal();

  const RequestTypeEntry& entry_for(RequestType t) const;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

/// Immutable after load; share it by const reference or shared_ptr<const>.
struct Catalog {
  int format_version = kCatalogFormatVersion;
  AnchorConstants anchors;
  TrainingAnchor training;
  std::vector<ModelProfile> models;
  FactorTable factors;
  std::vector<CountryMix> countries;
  Lexicon lexicon;

  const CountryMix* find_country(std::string_view code) const;
  const ModelProfile* find_model(std::string_view id) const;

  /// "<format_version>-<hash of anchor constants>"; stamped on every API
  /// response so published numbers trace back to a data snapshot.
  std::string methodology_version() const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

class CatalogError : public std::runtime_error {
 public:
  enum class Kind {
    kMissingFile,
    kSchema,
    kUnknownVersion,
    kDuplicateId,
    kUnresolvedCountry,
    kNonPositive,
    kCoverage,
  };

  CatalogError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Reads anchors.yaml, models.yaml, factors.yaml, countries.yaml and the
/// optional lexicon.yaml from `dir`, then validates the result.
Catalog load_catalog(const std::filesystem::path& dir);

/// Checks every invariant and cross-reference; throws CatalogError.
void validate_catalog(const Catalog& catalog);

/// Writes the bundle files; load_catalog(dir) yields an equal Catalog.
void save_catalog(const Catalog& catalog, const std::filesystem::path& dir);

enum class LookupStatus { kFound, kNotFound, kAmbiguous };

enum class MatchTier { kNone, kExactId, kName, kNormalized, kPrefix };

struct LookupResult {
  LookupStatus status = LookupStatus::kNotFound;
  const ModelProfile* profile = nullptr;
  MatchTier tier = MatchTier::kNone;
  /// Not found: nearest 3 ids by edit distance. Ambiguous: the tied ids.
  std::vector<std::string> candidates;
};

/// Exact id, then case-insensitive name, then normalized equality
/// (lowercase alphanumerics only), then unique normalized prefix.
LookupResult lookup_model(const Catalog& catalog, std::string_view query);

/// Lowercase alphanumerics of `s`.
std::string normalize_name(std::string_view s);

std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace impactscreen

#endif  // IMPACTSCREEN_CATALOG_HPP_
