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

#include "impactscreen/scenario_parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "impactscreen/display.hpp"

namespace impactscreen {
namespace {

struct Word {
  std::string raw;
  std::string lower;
  bool consumed = false;
};

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::string trim_word(std::string s) {
  constexpr std::string_view kLeading = "([{\"'~`*";
  constexpr std::string_view kTrailing = ",;:!?)]}\"'`*.";
  std::size_t b = 0;
  while (b < s.size() && kLeading.find(s[b]) != std::string_view::npos) ++b;
  std::size_t e = s.size();
  while (e > b && kTrailing.find(s[e - 1]) != std::string_view::npos) --e;
  return s.substr(b, e - b);
}

// Whitespace split; "4000/month" becomes "4000" "/month".
std::vector<Word> tokenize(std::string_view text) {
  std::vector<std::string> chunks;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (is_space(ch)) {
      if (!current.empty()) chunks.push_back(std::move(current));
      current.clear();
    } else if (ch == '/' && !current.empty() && i + 1 < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
      chunks.push_back(std::move(current));
      current = "/";
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) chunks.push_back(std::move(current));

  std::vector<Word> words;
  for (auto& chunk : chunks) {
    std::string w = trim_word(chunk);
    if (w.empty()) continue;
    words.push_back({w, lowercase(w), false});
  }
  return words;
}

std::vector<std::string> phrase_words(std::string_view phrase) {
  std::vector<std::string> out;
  for (auto& w : tokenize(phrase)) out.push_back(w.lower);
  return out;
}

// Length in words of `phrase` matched at `pos`, or 0.
std::size_t match_phrase(const std::vector<Word>& words, std::size_t pos,
                         const std::vector<std::string>& phrase) {
  if (phrase.empty() || pos + phrase.size() > words.size()) return 0;
  for (std::size_t k = 0; k < phrase.size(); ++k) {
    if (words[pos + k].consumed || words[pos + k].lower != phrase[k]) return 0;
  }
  return phrase.size();
}

std::string span_text(const std::vector<Word>& words, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += words[i].raw;
  }
  return out;
}

// ---------------------------------------------------------------- numbers

struct Quantity {
  double value = 0.0;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool dot_grouped = false;  // "4.000": thousands separator or decimal?
};

const std::map<std::string, int, std::less<>>& small_numbers() {
  static const std::map<std::string, int, std::less<>> kSmall = {
      {"zero", 0},      {"one", 1},        {"two", 2},        {"three", 3},      {"four", 4},
      {"five", 5},      {"six", 6},        {"seven", 7},      {"eight", 8},      {"nine", 9},
      {"ten", 10},      {"eleven", 11},    {"twelve", 12},    {"thirteen", 13},  {"fourteen", 14},
      {"fifteen", 15},  {"sixteen", 16},   {"seventeen", 17}, {"eighteen", 18},  {"nineteen", 19},
      {"twenty", 20},   {"thirty", 30},    {"forty", 40},     {"fifty", 50},     {"sixty", 60},
      {"seventy", 70},  {"eighty", 80},    {"ninety", 90}};
  return kSmall;
}

std::optional<double> magnitude_word(std::string_view w) {
  if (w == "hundred") return 1e2;
  if (w == "thousand" || w == "k") return 1e3;
  if (w == "million" || w == "mn" || w == "m") return 1e6;
  if (w == "billion" || w == "bn") return 1e9;
  return std::nullopt;
}

std::optional<Quantity> numeral_at(const std::vector<Word>& words, std::size_t i) {
  static const std::regex kComma(R"(^(-?)(\d{1,3}(?:,\d{3})+)$)");
  static const std::regex kDotGrouped(R"(^(-?)([1-9]\d{0,2}(?:\.\d{3})+)$)");
  static const std::regex kPlain(R"(^(-?\d+(?:\.\d+)?)$)");
  static const std::regex kSuffixed(R"(^(-?\d+(?:\.\d+)?)([kKmM])$)");

  const std::string& w = words[i].raw;
  std::smatch m;
  Quantity q;
  q.begin = i;
  q.end = i + 1;
  if (std::regex_match(w, m, kComma)) {
    std::string digits = m[2].str();
    digits.erase(std::remove(digits.begin(), digits.end(), ','), digits.end());
    q.value = std::stod(digits) * (m[1].length() ? -1.0 : 1.0);
  } else if (std::regex_match(w, m, kDotGrouped)) {
    std::string digits = m[2].str();
    digits.erase(std::remove(digits.begin(), digits.end(), '.'), digits.end());
    q.value = std::stod(digits) * (m[1].length() ? -1.0 : 1.0);
    q.dot_grouped = true;
  } else if (std::regex_match(w, m, kPlain)) {
    q.value = std::stod(m[1].str());
  } else if (std::regex_match(w, m, kSuffixed)) {
    const char suffix = static_cast<char>(std::tolower(static_cast<unsigned char>(m[2].str()[0])));
    q.value = std::stod(m[1].str()) * (suffix == 'k' ? 1e3 : 1e6);
    return q;
  } else {
    return std::nullopt;
  }
  if (q.end < words.size() && !words[q.end].consumed) {
    if (auto mag = magnitude_word(words[q.end].lower)) {
      q.value *= *mag;
      ++q.end;
    }
  }
  return q;
}

// "four thousand", "twenty-five", "a thousand", "one hundred and fifty".
std::optional<Quantity> word_number_at(const std::vector<Word>& words, std::size_t i) {
  double total = 0.0;
  double current = 0.0;
  bool any = false;
  std::size_t j = i;
  while (j < words.size() && !words[j].consumed) {
    const std::string& w = words[j].lower;
    if (w == "a" || w == "an") {
      if (any || j + 1 >= words.size() || !magnitude_word(words[j + 1].lower) || words[j + 1].lower == "k" ||
          words[j + 1].lower == "m") {
        break;
      }
      current = 1.0;
      ++j;
      continue;
    }
    if (w == "and" && any) {
      if (j + 1 < words.size() && small_numbers().count(words[j + 1].lower)) {
        ++j;
        continue;
      }
      break;
    }
    bool matched = false;
    // Hyphenated compounds such as "twenty-five".
    std::string_view rest = w;
    double compound = 0.0;
    bool compound_ok = true;
    while (!rest.empty()) {
      const auto dash = rest.find('-');
      const std::string_view part = rest.substr(0, dash);
      const auto it = small_numbers().find(part);
      if (it == small_numbers().end()) {
        compound_ok = false;
        break;
      }
      compound += it->second;
      rest = dash == std::string_view::npos ? std::string_view{} : rest.substr(dash + 1);
    }
    if (compound_ok && !w.empty()) {
      current += compound;
      matched = true;
    } else if (auto mag = magnitude_word(w); mag && w != "k" && w != "m" && w != "mn" && w != "bn") {
      if (!any && current == 0.0) break;
      if (*mag == 100.0) {
        current = (current == 0.0 ? 1.0 : current) * 100.0;
      } else {
        total += (current == 0.0 ? 1.0 : current) * *mag;
        current = 0.0;
      }
      matched = true;
    }
    if (!matched) break;
    any = true;
    ++j;
  }
  if (!any) return std::nullopt;
  Quantity q;
  q.value = total + current;
  q.begin = i;
  q.end = j;
  return q;
}

std::optional<Quantity> quantity_at(const std::vector<Word>& words, std::size_t i) {
  if (words[i].consumed) return std::nullopt;
  if (auto q = numeral_at(words, i)) return q;
  return word_number_at(words, i);
}

// ------------------------------------------------------------- lexicon

struct PeriodPhrase {
  std::vector<std::string> words;
  double per_month;
};

std::vector<PeriodPhrase> period_phrases(const Lexicon& lex) {
  std::vector<PeriodPhrase> out;
  for (const auto& p : lex.periods) {
    for (const auto& phrase : p.phrases) out.push_back({phrase_words(phrase), p.per_month});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.words.size() > b.words.size(); });
  return out;
}

// Words that may sit between a quantity and its period besides volume nouns.
bool is_filler(std::string_view w) {
  static const std::set<std::string, std::less<>> kFiller = {
      "customer", "user", "end-user", "api", "support", "chatbot", "total", "unique", "distinct",
      "llm", "model", "search", "internal", "external", "more", "or", "so", "inference", "agent",
      "assistant", "retrieval", "employee", "client"};
  return kFiller.count(w) > 0;
}

struct VolumeReading {
  double monthly = 0.0;
  std::string text;
  bool dot_grouped = false;
  double raw = 0.0;
};

struct TokenReading {
  bool input = true;
  double count = 0.0;
  std::string text;
  bool dot_grouped = false;
};

std::vector<std::string> example_suggestions(const Catalog& catalog) {
  std::vector<std::string> out;
  out.push_back("describe the feature with a model and a volume, e.g. 'We use GPT-4o-mini for customer "
                "support, around 4,000 uses per month.'");
  for (std::size_t i = 0; i < catalog.models.size() && i < 3; ++i) out.push_back(catalog.models[i].id);
  return out;
}

// ------------------------------------------------------------- model

struct ModelMatch {
  std::size_t begin = 0;
  std::size_t len = 0;
  const ModelProfile* profile = nullptr;
  MatchTier tier = MatchTier::kNone;
};

constexpr std::size_t kMaxModelWords = 4;
constexpr std::size_t kMinPrefixChars = 3;

}  // namespace

std::string_view to_string(FieldProvenance p) {
  switch (p) {
    case FieldProvenance::kExplicit: return "explicit";
    case FieldProvenance::kInferred: return "inferred";
    case FieldProvenance::kDefault: return "default";
  }
  return "?";
}

std::optional<FieldProvenance> field_provenance_from_string(std::string_view s) {
  if (s == "explicit") return FieldProvenance::kExplicit;
  if (s == "inferred") return FieldProvenance::kInferred;
  if (s == "default") return FieldProvenance::kDefault;
  return std::nullopt;
}

std::string_view to_string(Diagnostic::Code c) {
  switch (c) {
    case Diagnostic::Code::kEmptyDescription: return "empty_description";
    case Diagnostic::Code::kNoModel: return "no_model";
    case Diagnostic::Code::kAmbiguousModel: return "ambiguous_model";
    case Diagnostic::Code::kConflictingVolume: return "conflicting_volume";
    case Diagnostic::Code::kNonPositiveVolume: return "non_positive_volume";
    case Diagnostic::Code::kAmbiguousNumber: return "ambiguous_number";
    case Diagnostic::Code::kConflictingTokens: return "conflicting_tokens";
    case Diagnostic::Code::kConflictingCountry: return "conflicting_country";
  }
  return "?";
}

FieldProvenance Scenario::provenance_of(std::string_view f) const {
  const auto it = field_provenance.find(f);
  return it == field_provenance.end() ? FieldProvenance::kDefault : it->second;
}

ParseResult parse_scenario(std::string_view description, const Catalog& catalog) {
  ParseResult result;
  auto fail = [&](Diagnostic::Code code, std::string message, std::vector<std::string> suggestions) {
    result.diagnostics.push_back({code, std::move(message), std::move(suggestions)});
  };

  std::vector<Word> words = tokenize(description);
  if (words.empty()) {
    fail(Diagnostic::Code::kEmptyDescription, "the description is empty", example_suggestions(catalog));
    return result;
  }

  Scenario scenario;
  const Lexicon& lex = catalog.lexicon;

  // (1) Model mention: longest n-gram that resolves, earliest first.
  std::vector<ModelMatch> found;
  std::vector<std::string> ambiguous;
  for (std::size_t n = std::min(kMaxModelWords, words.size()); n >= 1; --n) {
    for (std::size_t b = 0; b + n <= words.size(); ++b) {
      const std::string phrase = span_text(words, b, b + n);
      const LookupResult r = lookup_model(catalog, phrase);
      const std::size_t norm_len = normalize_name(phrase).size();
      if (r.tier == MatchTier::kPrefix && norm_len < kMinPrefixChars) continue;
      if (r.status == LookupStatus::kFound) {
        found.push_back({b, n, r.profile, r.tier});
      } else if (r.status == LookupStatus::kAmbiguous) {
        for (const auto& c : r.candidates) {
          if (std::find(ambiguous.begin(), ambiguous.end(), c) == ambiguous.end()) ambiguous.push_back(c);
        }
      }
    }
  }
  std::vector<ModelMatch> accepted;
  for (const auto& m : found) {  // already ordered by length desc, then position
    const bool overlaps = std::any_of(accepted.begin(), accepted.end(), [&](const ModelMatch& a) {
      return m.begin < a.begin + a.len && a.begin < m.begin + m.len;
    });
    if (!overlaps) accepted.push_back(m);
  }
  std::vector<std::string> model_ids;
  for (const auto& m : accepted) {
    if (std::find(model_ids.begin(), model_ids.end(), m.profile->id) == model_ids.end()) {
      model_ids.push_back(m.profile->id);
    }
  }
  if (model_ids.size() > 1) {
    fail(Diagnostic::Code::kAmbiguousModel,
         fmt::format("the description mentions several models ({}); describe one feature at a time",
                     fmt::join(model_ids, ", ")),
         model_ids);
  } else if (model_ids.size() == 1) {
    scenario.model_id = model_ids.front();
    const bool prefix_only = std::all_of(accepted.begin(), accepted.end(),
                                         [](const ModelMatch& m) { return m.tier == MatchTier::kPrefix; });
    scenario.field_provenance[std::string(field::kModel)] =
        prefix_only ? FieldProvenance::kInferred : FieldProvenance::kExplicit;
    for (const auto& m : accepted) {
      for (std::size_t k = m.begin; k < m.begin + m.len; ++k) words[k].consumed = true;
    }
  } else if (!ambiguous.empty()) {
    fail(Diagnostic::Code::kAmbiguousModel,
         fmt::format("the model mention is ambiguous; candidates: {}", fmt::join(ambiguous, ", ")), ambiguous);
  } else {
    // Suggest the three catalog models closest to any short phrase.
    std::map<std::string, std::size_t> best;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t b = 0; b + n <= words.size(); ++b) {
        const std::string norm = normalize_name(span_text(words, b, b + n));
        if (norm.empty()) continue;
        for (const auto& m : catalog.models) {
          std::vector<std::string> names{m.id, m.display_name};
          names.insert(names.end(), m.aliases.begin(), m.aliases.end());
          for (const auto& name : names) {
            const std::size_t d = edit_distance(norm, normalize_name(name));
            auto [it, inserted] = best.emplace(m.id, d);
            if (!inserted) it->second = std::min(it->second, d);
          }
        }
      }
    }
    std::vector<std::pair<std::size_t, std::string>> ranked;
    for (const auto& [id, d] : best) ranked.emplace_back(d, id);
    std::sort(ranked.begin(), ranked.end());
    std::vector<std::string> suggestions;
    for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) suggestions.push_back(ranked[i].second);
    if (suggestions.empty()) suggestions = example_suggestions(catalog);
    fail(Diagnostic::Code::kNoModel, "no catalog model is mentioned in the description", suggestions);
  }

  // (2) Quantities bound to token words or to a period.
  const auto periods = period_phrases(lex);
  const std::set<std::string, std::less<>> nouns(lex.volume_nouns.begin(), lex.volume_nouns.end());
  std::vector<VolumeReading> volumes;
  std::vector<TokenReading> token_counts;
  for (std::size_t i = 0; i < words.size();) {
    const auto q = quantity_at(words, i);
    if (!q) {
      ++i;
      continue;
    }
    const std::size_t e = q->end;
    auto at = [&](std::size_t k) -> std::string_view {
      return k < words.size() && !words[k].consumed ? std::string_view(words[k].lower) : std::string_view{};
    };
    // Token counts: "1,200 input tokens", "300 output tokens", "500 tokens of output".
    const std::string_view w0 = at(e), w1 = at(e + 1), w2 = at(e + 2);
    const bool tokens1 = w1 == "tokens" || w1 == "token";
    std::optional<bool> token_input;
    std::size_t token_end = e;
    if ((w0 == "input" || w0 == "prompt") && tokens1) {
      token_input = true;
      token_end = e + 2;
    } else if ((w0 == "output" || w0 == "completion" || w0 == "response" || w0 == "generated") && tokens1) {
      token_input = false;
      token_end = e + 2;
    } else if ((w0 == "tokens" || w0 == "token") && w1 == "of" && (w2 == "input" || w2 == "output")) {
      token_input = w2 == "input";
      token_end = e + 3;
    }
    if (token_input) {
      token_counts.push_back({*token_input, q->value, span_text(words, q->begin, token_end), q->dot_grouped});
      i = token_end;
      continue;
    }

    std::size_t j = e;
    std::size_t skipped = 0;
    std::optional<double> per_month;
    std::size_t period_end = e;
    while (j < words.size() && !words[j].consumed) {
      for (const auto& p : periods) {
        if (const std::size_t len = match_phrase(words, j, p.words)) {
          per_month = p.per_month;
          period_end = j + len;
          break;
        }
      }
      if (per_month || skipped == 3) break;
      if (!nouns.count(words[j].lower) && !is_filler(words[j].lower)) break;
      ++skipped;
      ++j;
    }
    if (per_month) {
      volumes.push_back({q->value * *per_month, span_text(words, q->begin, period_end), q->dot_grouped, q->value});
      i = period_end;
    } else {
      i = e;
    }
  }

  for (const auto& v : volumes) {
    if (v.dot_grouped) {
      fail(Diagnostic::Code::kAmbiguousNumber,
           fmt::format("'{}' uses '.' as a separator; it may be a decimal or a thousands group", v.text),
           {fmt::format("write {} with ',' or no separator for the thousands reading",
                        display::count(std::fabs(v.raw))),
            "write the decimal with a single fractional digit group (e.g. 4.5) for the decimal reading"});
    }
  }
  for (const auto& t : token_counts) {
    if (t.dot_grouped) {
      fail(Diagnostic::Code::kAmbiguousNumber,
           fmt::format("'{}' uses '.' as a separator; it may be a decimal or a thousands group", t.text),
           {"write token counts without '.' separators"});
    }
  }

  std::vector<VolumeReading> distinct;
  for (const auto& v : volumes) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const VolumeReading& d) {
      return std::fabs(d.monthly - v.monthly) <= 1e-9 * std::max(1.0, std::fabs(v.monthly));
    });
    if (!seen) distinct.push_back(v);
  }
  if (distinct.size() > 1) {
    std::vector<std::string> readings;
    for (const auto& d : distinct) {
      readings.push_back(fmt::format("{} requests/month (from '{}')", display::count(d.monthly), d.text));
    }
    fail(Diagnostic::Code::kConflictingVolume,
         fmt::format("the description gives {} different usage volumes", distinct.size()), readings);
  } else if (distinct.size() == 1) {
    const VolumeReading& v = distinct.front();
    if (!(v.monthly >= 1.0)) {
      fail(Diagnostic::Code::kNonPositiveVolume,
           fmt::format("'{}' is {} requests per month; at least one request per month is required", v.text,
                       display::count(v.monthly)),
           {"state a positive volume, e.g. '1,000 requests per month'"});
    } else {
      scenario.requests_per_month = v.monthly;
      scenario.field_provenance[std::string(field::kRequestsPerMonth)] = FieldProvenance::kExplicit;
    }
  }

  // (3) Request type by keyword hits; ties go to the earlier lexicon entry.
  std::size_t best_hits = 0;
  const Lexicon::RequestTypeEntry* best_type = nullptr;
  for (const auto& entry : lex.request_types) {
    std::size_t hits = 0;
    for (const auto& keyword : entry.keywords) {
      const auto kw = phrase_words(keyword);
      for (std::size_t p = 0; p < words.size(); ++p) hits += match_phrase(words, p, kw) ? 1 : 0;
    }
    if (hits > best_hits) {
      best_hits = hits;
      best_type = &entry;
    }
  }
  if (best_type) {
    scenario.request_type = best_type->type;
    scenario.field_provenance[std::string(field::kRequestType)] = FieldProvenance::kInferred;
  } else {
    scenario.request_type = RequestType::kGeneric;
    scenario.field_provenance[std::string(field::kRequestType)] = FieldProvenance::kDefault;
  }

  // (4) Token load: explicit counts, else the request-type default.
  const Lexicon::RequestTypeEntry& defaults = lex.entry_for(scenario.request_type);
  std::optional<double> input, output;
  bool token_conflict = false;
  for (const auto& t : token_counts) {
    auto& slot = t.input ? input : output;
    if (slot && *slot != t.count) token_conflict = true;
    slot = t.count;
  }
  if (token_conflict) {
    std::vector<std::string> readings;
    for (const auto& t : token_counts) readings.push_back(t.text);
    fail(Diagnostic::Code::kConflictingTokens, "the description gives conflicting token counts", readings);
  }
  const FieldProvenance token_prov = input && output   ? FieldProvenance::kExplicit
                                     : input || output ? FieldProvenance::kInferred
                                                       : FieldProvenance::kDefault;
  try {
    scenario.token_load =
        TokenLoad(input.value_or(defaults.default_input_tokens), output.value_or(defaults.default_output_tokens));
  } catch (const InvalidArgument& e) {
    fail(Diagnostic::Code::kConflictingTokens, e.what(), {"give positive input and output token counts"});
  }
  scenario.field_provenance[std::string(field::kTokenLoad)] = token_prov;

  // (5) Country mention. Codes only in upper case.
  std::vector<std::string> countries;
  auto add_country = [&](const std::string& code) {
    if (std::find(countries.begin(), countries.end(), code) == countries.end()) countries.push_back(code);
  };
  for (std::size_t p = 0; p < words.size(); ++p) {
    for (const auto& entry : lex.countries) {
      if (!words[p].consumed && words[p].raw == entry.code) add_country(entry.code);
      for (const auto& name : entry.names) {
        if (match_phrase(words, p, phrase_words(name))) add_country(entry.code);
      }
    }
    if (!words[p].consumed && catalog.find_country(words[p].raw)) add_country(words[p].raw);
  }
  if (countries.size() > 1) {
    fail(Diagnostic::Code::kConflictingCountry,
         fmt::format("the description mentions several countries ({})", fmt::join(countries, ", ")), countries);
  } else if (countries.size() == 1) {
    scenario.country_code = countries.front();
    scenario.field_provenance[std::string(field::kCountry)] = FieldProvenance::kExplicit;
  }

  for (std::string_view f : field::kAll) {
    scenario.field_provenance.try_emplace(std::string(f), FieldProvenance::kDefault);
  }
  if (result.diagnostics.empty()) result.scenario = std::move(scenario);
  return result;
}

std::string render_scenario(const Scenario& s) {
  auto tag = [&](std::string_view f) { return to_string(s.provenance_of(f)); };
  return fmt::format(
      "model={} ({}); request_type={} ({}); tokens={} in/{} out ({}); volume={} ({}); country={} ({})",
      s.model_id, tag(field::kModel), to_string(s.request_type), tag(field::kRequestType),
      display::count(s.token_load.input_tokens()), display::count(s.token_load.output_tokens()),
      tag(field::kTokenLoad),
      s.requests_per_month ? display::count(*s.requests_per_month) + "/month" : std::string("unspecified"),
      tag(field::kRequestsPerMonth), s.country_code.value_or("provider default"), tag(field::kCountry));
}

}  // namespace impactscreen
