// Copyright 2026 The popdisc Authors.
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

#include "popdisc/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>

#include "popdisc/errors.h"

namespace popdisc {
namespace {

using nlohmann::json;
namespace chr = std::chrono;

struct CampaignWindow {
  Campaign campaign;
  chr::year_month_day first;
  chr::year_month_day last;
};

constexpr std::array<CampaignWindow, 4> kWindows = {{
    {Campaign::kPrimaries2016, chr::year{2015} / 6 / 16,
     chr::year{2016} / 7 / 19},
    {Campaign::kElection2016, chr::year{2016} / 7 / 21,
     chr::year{2016} / 11 / 8},
    {Campaign::kElection2020, chr::year{2019} / 6 / 18,
     chr::year{2020} / 11 / 3},
    {Campaign::kElection2024, chr::year{2022} / 11 / 15,
     chr::year{2024} / 11 / 5},
}};

struct SwingLists {
  Campaign campaign;
  std::vector<std::string_view> ballotpedia;
  std::vector<std::string_view> high_attention;
};

const std::vector<SwingLists>& SwingTable() {
  static const std::vector<SwingLists> table = {
      {Campaign::kElection2016,
       {"AZ", "CO", "FL", "IA", "MI", "NV", "NH", "NC", "OH", "PA", "VA",
        "WI"},
       {"FL", "NC", "OH", "PA", "CO"}},
      {Campaign::kElection2020,
       {"AZ", "FL", "GA", "IA", "MI", "MN", "NV", "NH", "NC", "OH", "PA", "TX",
        "WI"},
       {"PA", "NC", "FL", "MI", "WI", "AZ", "MN", "OH"}},
      {Campaign::kElection2024,
       {"AZ", "GA", "MI", "NV", "NC", "PA", "WI"},
       {"IA", "PA", "NC", "NH", "MI", "WI"}},
  };
  return table;
}

std::string UpperState(std::string_view state) {
  std::string out(state);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

std::optional<bool> SwingLookup(Campaign campaign, std::string_view state,
                                bool ballotpedia) {
  const std::string key = UpperState(state);
  for (const SwingLists& row : SwingTable()) {
    if (row.campaign != campaign) continue;
    const auto& list = ballotpedia ? row.ballotpedia : row.high_attention;
    return std::find(list.begin(), list.end(), key) != list.end();
  }
  return std::nullopt;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

const std::set<std::string, std::less<>> kSentenceFields = {
    "speech_id", "index", "text", "labels", "date", "location",
    "state", "campaign", "swing_ballotpedia", "swing_high_attention"};

// Speech-level metadata carried on each record.
struct RecordMeta {
  std::optional<chr::year_month_day> date;
  std::string location;
  std::optional<std::string> state;
  std::optional<Campaign> campaign;
  std::optional<bool> swing_ballotpedia;
  std::optional<bool> swing_high_attention;
  json extra = json::object();
};

std::string RequireString(const json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end()) {
    throw InputError(fmt::format("missing field '{}'", key));
  }
  if (!it->is_string()) {
    throw InputError(fmt::format("field '{}' must be a string", key));
  }
  return it->get<std::string>();
}

std::optional<std::string> OptionalString(const json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw InputError(fmt::format("field '{}' must be a string", key));
  }
  return it->get<std::string>();
}

std::optional<bool> OptionalBool(const json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_boolean()) {
    throw InputError(fmt::format("field '{}' must be a boolean", key));
  }
  return it->get<bool>();
}

RecordMeta ParseMeta(const json& record) {
  RecordMeta meta;
  if (auto date = OptionalString(record, "date")) meta.date = ParseDate(*date);
  meta.location = OptionalString(record, "location").value_or("");
  meta.state = OptionalString(record, "state");
  if (auto campaign = OptionalString(record, "campaign")) {
    meta.campaign = ParseCampaign(*campaign);
  }
  meta.swing_ballotpedia = OptionalBool(record, "swing_ballotpedia");
  meta.swing_high_attention = OptionalBool(record, "swing_high_attention");
  for (const auto& [key, value] : record.items()) {
    if (!kSentenceFields.contains(key)) meta.extra[key] = value;
  }
  if (meta.campaign && meta.date && *meta.campaign != Campaign::kOther &&
      CampaignForDate(*meta.date) != *meta.campaign) {
    throw InputError(fmt::format("campaign {} inconsistent with date {}",
                                 CampaignName(*meta.campaign),
                                 FormatDate(*meta.date)));
  }
  return meta;
}

template <typename T>
void MergeField(std::optional<T>& into, const std::optional<T>& from,
                const char* name, const std::string& speech_id) {
  if (!from) return;
  if (!into) {
    into = from;
  } else if (*into != *from) {
    throw InputError(fmt::format("conflicting '{}' for speech '{}'", name,
                                 speech_id));
  }
}

void MergeMeta(Speech& speech, RecordMeta&& meta) {
  MergeField(speech.date, meta.date, "date", speech.id);
  if (speech.location.empty()) {
    speech.location = std::move(meta.location);
  } else if (!meta.location.empty() && meta.location != speech.location) {
    throw InputError(
        fmt::format("conflicting 'location' for speech '{}'", speech.id));
  }
  MergeField(speech.state, meta.state, "state", speech.id);
  MergeField(speech.campaign, meta.campaign, "campaign", speech.id);
  MergeField(speech.swing_ballotpedia, meta.swing_ballotpedia,
             "swing_ballotpedia", speech.id);
  MergeField(speech.swing_high_attention, meta.swing_high_attention,
             "swing_high_attention", speech.id);
  for (auto& [key, value] : meta.extra.items()) {
    if (!speech.extra.contains(key)) speech.extra[key] = std::move(value);
  }
}

std::optional<LabelSet> ParseLabels(const json& record) {
  auto it = record.find("labels");
  if (it == record.end()) return LabelSet::Neutral();
  if (it->is_null()) return std::nullopt;
  if (!it->is_array()) throw InputError("field 'labels' must be an array");
  std::vector<std::string> tokens;
  for (const json& token : *it) {
    if (!token.is_string()) throw InputError("label tokens must be strings");
    tokens.push_back(token.get<std::string>());
  }
  return FromTokens(tokens);
}

int ParseIndex(const json& record) {
  auto it = record.find("index");
  if (it == record.end()) throw InputError("missing field 'index'");
  if (!it->is_number_integer()) {
    throw InputError("field 'index' must be an integer");
  }
  const auto value = it->get<long long>();
  if (value < 0 || value > std::numeric_limits<int>::max()) {
    throw InputError("field 'index' out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

int CountWords(std::string_view text) {
  int count = 0;
  bool in_word = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

Sentence MakeSentence(std::string text, int index,
                      std::optional<LabelSet> gold) {
  Sentence sentence;
  sentence.word_count = CountWords(text);
  sentence.text = std::move(text);
  sentence.index = index;
  sentence.gold = gold;
  return sentence;
}

std::string_view CampaignName(Campaign campaign) {
  switch (campaign) {
    case Campaign::kPrimaries2016: return "Primaries2016";
    case Campaign::kElection2016: return "Election2016";
    case Campaign::kElection2020: return "Election2020";
    case Campaign::kElection2024: return "Election2024";
    case Campaign::kOther: return "Other";
  }
  return "Other";
}

Campaign ParseCampaign(std::string_view text) {
  std::string key;
  for (unsigned char c : text) {
    if (std::isalnum(c)) key.push_back(static_cast<char>(std::tolower(c)));
  }
  static const std::map<std::string, Campaign, std::less<>> kNames = {
      {"primaries2016", Campaign::kPrimaries2016},
      {"2016primaries", Campaign::kPrimaries2016},
      {"election2016", Campaign::kElection2016},
      {"2016election", Campaign::kElection2016},
      {"2016campaign", Campaign::kElection2016},
      {"campaign2016", Campaign::kElection2016},
      {"election2020", Campaign::kElection2020},
      {"2020election", Campaign::kElection2020},
      {"2020campaign", Campaign::kElection2020},
      {"campaign2020", Campaign::kElection2020},
      {"election2024", Campaign::kElection2024},
      {"2024election", Campaign::kElection2024},
      {"2024campaign", Campaign::kElection2024},
      {"campaign2024", Campaign::kElection2024},
      {"other", Campaign::kOther},
  };
  auto it = kNames.find(key);
  if (it == kNames.end()) {
    throw InputError("unknown campaign '" + std::string(text) + "'");
  }
  return it->second;
}

Campaign CampaignForDate(chr::year_month_day date) {
  const chr::sys_days day{date};
  for (const CampaignWindow& window : kWindows) {
    if (day >= chr::sys_days{window.first} &&
        day <= chr::sys_days{window.last}) {
      return window.campaign;
    }
  }
  return Campaign::kOther;
}

chr::year_month_day ParseDate(std::string_view text) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  const std::string buffer(text);
  if (buffer.size() != 10 ||
      std::sscanf(buffer.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    throw InputError("invalid date '" + buffer + "' (expected YYYY-MM-DD)");
  }
  const chr::year_month_day date{chr::year{y}, chr::month{m}, chr::day{d}};
  if (!date.ok()) throw InputError("invalid calendar date '" + buffer + "'");
  return date;
}

std::string FormatDate(chr::year_month_day date) {
  return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(date.year()),
                     static_cast<unsigned>(date.month()),
                     static_cast<unsigned>(date.day()));
}

std::optional<bool> IsBallotpediaSwing(Campaign campaign,
                                       std::string_view state) {
  return SwingLookup(campaign, state, true);
}

std::optional<bool> IsHighAttentionSwing(Campaign campaign,
                                         std::string_view state) {
  return SwingLookup(campaign, state, false);
}

void DeriveMetadata(Speech& speech) {
  if (!speech.campaign && speech.date) {
    speech.campaign = CampaignForDate(*speech.date);
  }
  if (speech.campaign && speech.state) {
    if (!speech.swing_ballotpedia) {
      speech.swing_ballotpedia =
          IsBallotpediaSwing(*speech.campaign, *speech.state);
    }
    if (!speech.swing_high_attention) {
      speech.swing_high_attention =
          IsHighAttentionSwing(*speech.campaign, *speech.state);
    }
  }
}

std::size_t Corpus::sentence_count() const {
  std::size_t total = 0;
  for (const Speech& speech : speeches) total += speech.sentences.size();
  return total;
}

const Speech* Corpus::find(std::string_view speech_id) const {
  for (const Speech& speech : speeches) {
    if (speech.id == speech_id) return &speech;
  }
  return nullptr;
}

IngestSchema ParseIngestSchema(std::string_view name) {
  if (name == "sentences") return IngestSchema::kSentences;
  if (name == "raw" || name == "rawSpeeches" || name == "raw-speeches") {
    return IngestSchema::kRawSpeeches;
  }
  throw InputError("unknown schema '" + std::string(name) +
                   "' (expected sentences|raw)");
}

Corpus IngestJsonl(const std::filesystem::path& path, IngestSchema schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return IngestJsonl(in, schema, path.filename().string());
}

Corpus IngestJsonl(std::istream& in, IngestSchema schema, std::string name) {
  Corpus corpus;
  corpus.name = std::move(name);
  std::unordered_map<std::string, std::size_t> slot;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    try {
      const json record = json::parse(line);
      if (!record.is_object()) throw InputError("record is not an object");
      std::string speech_id = RequireString(record, "speech_id");
      RecordMeta meta = ParseMeta(record);
      auto [it, inserted] = slot.try_emplace(speech_id, corpus.speeches.size());
      if (inserted) {
        corpus.speeches.emplace_back().id = speech_id;
      } else if (schema == IngestSchema::kRawSpeeches) {
        throw InputError("duplicate speech_id '" + speech_id + "'");
      }
      Speech& speech = corpus.speeches[it->second];
      MergeMeta(speech, std::move(meta));
      if (schema == IngestSchema::kSentences) {
        speech.sentences.push_back(MakeSentence(
            RequireString(record, "text"), ParseIndex(record),
            ParseLabels(record)));
      } else {
        speech.sentences = Segment(RequireString(record, "text"));
      }
    } catch (const json::exception& e) {
      throw InputError(fmt::format("{}:{}: malformed JSON: {}", corpus.name,
                                   line_no, e.what()));
    } catch (const InputError& e) {
      throw InputError(fmt::format("{}:{}: {}", corpus.name, line_no,
                                   e.what()));
    }
  }
  for (Speech& speech : corpus.speeches) {
    auto& sentences = speech.sentences;
    std::stable_sort(sentences.begin(), sentences.end(),
                     [](const Sentence& a, const Sentence& b) {
                       return a.index < b.index;
                     });
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (i > 0 && sentences[i].index == sentences[i - 1].index) {
        throw InputError(fmt::format("{}: duplicate (speech_id, index) "
                                     "('{}', {})",
                                     corpus.name, speech.id,
                                     sentences[i].index));
      }
      if (sentences[i].index != static_cast<int>(i)) {
        throw InputError(fmt::format(
            "{}: speech '{}' has non-contiguous indices (missing {})",
            corpus.name, speech.id, i));
      }
    }
    DeriveMetadata(speech);
  }
  return corpus;
}

void WriteSentenceJsonl(const Corpus& corpus, std::ostream& out) {
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      nlohmann::ordered_json record;
      record["speech_id"] = speech.id;
      record["index"] = sentence.index;
      record["text"] = sentence.text;
      if (sentence.gold) {
        record["labels"] = ToTokens(*sentence.gold);
      } else {
        record["labels"] = nullptr;
      }
      if (speech.date) record["date"] = FormatDate(*speech.date);
      if (!speech.location.empty()) record["location"] = speech.location;
      if (speech.state) record["state"] = *speech.state;
      if (speech.campaign) record["campaign"] = CampaignName(*speech.campaign);
      if (speech.swing_ballotpedia) {
        record["swing_ballotpedia"] = *speech.swing_ballotpedia;
      }
      if (speech.swing_high_attention) {
        record["swing_high_attention"] = *speech.swing_high_attention;
      }
      for (const auto& [key, value] : speech.extra.items()) {
        record[key] = value;
      }
      out << record.dump(-1, ' ', false, json::error_handler_t::replace)
          << '\n';
    }
  }
}

LabelDistribution CorpusStats(const Corpus& corpus) {
  LabelDistribution dist;
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      if (!sentence.gold) {
        throw InputError(fmt::format(
            "speech '{}' sentence {} has no gold label", speech.id,
            sentence.index));
      }
      const LabelSet labels = *sentence.gold;
      ++dist.total;
      if (labels.neutral()) ++dist.neutral;
      if (labels.anti_elitism) ++dist.anti_elitism;
      if (labels.people_centrism) ++dist.people_centrism;
      if (labels.fully_populist()) ++dist.fully_populist;
    }
  }
  return dist;
}

}  // namespace popdisc
