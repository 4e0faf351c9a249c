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

#ifndef POPDISC_CORPUS_H_
#define POPDISC_CORPUS_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "popdisc/label_set.h"

namespace popdisc {

struct Sentence {
  std::string text;
  int index = 0;
  int word_count = 0;
  std::optional<LabelSet> gold;
  std::optional<LabelSet> predicted;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Number of whitespace-delimited tokens; punctuation stays attached.
int CountWords(std::string_view text);

Sentence MakeSentence(std::string text, int index,
                      std::optional<LabelSet> gold = std::nullopt);

enum class Campaign {
  kPrimaries2016,
  kElection2016,
  kElection2020,
  kElection2024,
  kOther,
};

inline constexpr Campaign kElectionCampaigns[] = {
    Campaign::kElection2016, Campaign::kElection2020, Campaign::kElection2024};

std::string_view CampaignName(Campaign campaign);
// Accepts canonical names plus loose spellings such as "2016 Primaries" or
// "2020 campaign". Throws InputError for anything else.
Campaign ParseCampaign(std::string_view text);

// Campaign window containing `date` (declaration to election day, both
// inclusive); kOther between campaigns.
Campaign CampaignForDate(std::chrono::year_month_day date);

std::chrono::year_month_day ParseDate(std::string_view text);
std::string FormatDate(std::chrono::year_month_day date);

// Swing-state membership for the three general-election campaigns under the
// Ballotpedia lists and the high-campaign-attention proxy. nullopt when the
// campaign is not a general election.
std::optional<bool> IsBallotpediaSwing(Campaign campaign,
                                       std::string_view state);
std::optional<bool> IsHighAttentionSwing(Campaign campaign,
                                         std::string_view state);

struct Speech {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<std::chrono::year_month_day> date;
  std::string location;
  std::optional<std::string> state;
  std::optional<Campaign> campaign;
  std::optional<bool> swing_ballotpedia;
  std::optional<bool> swing_high_attention;
  // Unrecognized record fields, preserved verbatim.
  nlohmann::json extra = nlohmann::json::object();

  std::size_t size() const { return sentences.size(); }

  friend bool operator==(const Speech&, const Speech&) = default;
};

struct Corpus {
  std::string name;
  std::vector<Speech> speeches;

  std::size_t sentence_count() const;
  const Speech* find(std::string_view speech_id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class IngestSchema { kSentences, kRawSpeeches };

IngestSchema ParseIngestSchema(std::string_view name);

// Reads a JSONL corpus. Sentence records are grouped by speech_id in order
// of first appearance and sorted by index; indices must be unique and
// contiguous from 0. Raw-speech records are segmented on ingest. Errors
// carry the 1-based line number.
Corpus IngestJsonl(const std::filesystem::path& path, IngestSchema schema);
Corpus IngestJsonl(std::istream& in, IngestSchema schema,
                   std::string name = "stdin");

// Writes the corpus in the sentence JSONL schema, one record per sentence.
void WriteSentenceJsonl(const Corpus& corpus, std::ostream& out);

// Fills in campaign and swing flags from date and state where absent.
void DeriveMetadata(Speech& speech);

// Rule-based sentence splitter. Splits after runs of . ! ? (plus closing
// quotes/brackets) when followed by whitespace and an upper-case letter,
// digit or opening quote. Known abbreviations and single-letter initials do
// not end a sentence.
std::vector<Sentence> Segment(std::string_view raw_text);

bool IsKnownAbbreviation(std::string_view token);

struct FilterResult {
  std::vector<Sentence> kept;
  std::vector<Sentence> dropped;
  // Sentences starting with a lower-case or upper-case variant of the thank
  // prefix that were not dropped for it.
  int thank_case_variants = 0;
};

// True when the sentence is excluded from index scoring: fewer than three
// words, or starting with "Thank " after leading whitespace and quotes.
bool IsExcludedFromScoring(const Sentence& sentence);
FilterResult FilterForScoring(const Speech& speech);

struct LabelDistribution {
  std::size_t total = 0;
  std::size_t neutral = 0;
  std::size_t anti_elitism = 0;
  std::size_t people_centrism = 0;
  std::size_t fully_populist = 0;

  double percent(std::size_t count) const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                  static_cast<double>(total);
  }
};

// Gold-label distribution; fully populist sentences count toward both AE and
// PC. Throws InputError naming the first speech with an unlabeled sentence.
LabelDistribution CorpusStats(const Corpus& corpus);

}  // namespace popdisc

#endif  // POPDISC_CORPUS_H_
