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

// Sentence splitting and the scoring filters.

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "popdisc/corpus.h"

namespace popdisc {
namespace {

constexpr std::array<std::string_view, 39> kAbbreviations = {
    "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Jr.",   "Sr.",   "St.",   "Prof.",
    "Gen.",  "Sen.",  "Rep.",  "Gov.",  "Lt.",   "Col.",  "Sgt.",  "Capt.",
    "Rev.",  "Hon.",  "Mt.",   "Ft.",   "vs.",   "etc.",  "e.g.",  "i.e.",
    "U.S.",  "U.S.A.", "D.C.", "U.K.",  "a.m.",  "p.m.",  "Inc.",  "Corp.",
    "Ltd.",  "Jan.",  "Feb.",  "Aug.",  "Sept.", "Oct.",  "Nov."};

// UTF-8 curly quotes: U+2018 ‘, U+2019 ’, U+201C “, U+201D ”.
bool IsCurlyQuoteAt(std::string_view text, std::size_t i, bool opening) {
  if (i + 3 > text.size()) return false;
  if (static_cast<unsigned char>(text[i]) != 0xE2 ||
      static_cast<unsigned char>(text[i + 1]) != 0x80) {
    return false;
  }
  const auto third = static_cast<unsigned char>(text[i + 2]);
  return opening ? (third == 0x98 || third == 0x9C)
                 : (third == 0x99 || third == 0x9D);
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Skips closing quotes and brackets that belong to the sentence just ended.
std::size_t SkipClosers(std::string_view text, std::size_t i) {
  while (i < text.size()) {
    const char c = text[i];
    if (c == '"' || c == '\'' || c == ')' || c == ']') {
      ++i;
    } else if (IsCurlyQuoteAt(text, i, /*opening=*/false)) {
      i += 3;
    } else {
      break;
    }
  }
  return i;
}

bool StartsSentence(std::string_view text, std::size_t i) {
  const auto c = static_cast<unsigned char>(text[i]);
  return std::isupper(c) || std::isdigit(c) || c == '"' || c == '\'' ||
         c == '(' || IsCurlyQuoteAt(text, i, /*opening=*/true);
}

// The whitespace-delimited token ending at `period`, without leading
// opening punctuation.
std::string_view TokenEndingAt(std::string_view text, std::size_t period) {
  std::size_t begin = period;
  while (begin > 0 &&
         !std::isspace(static_cast<unsigned char>(text[begin - 1]))) {
    --begin;
  }
  std::string_view token = text.substr(begin, period + 1 - begin);
  while (!token.empty() && (token.front() == '"' || token.front() == '\'' ||
                            token.front() == '(')) {
    token.remove_prefix(1);
  }
  if (token.size() >= 3 && IsCurlyQuoteAt(token, 0, /*opening=*/true)) {
    token.remove_prefix(3);
  }
  return token;
}

bool SuppressedByAbbreviation(std::string_view token) {
  if (IsKnownAbbreviation(token)) return true;
  // Single-letter initial such as the "J." in "Donald J. Trump".
  return token.size() == 2 &&
         std::isupper(static_cast<unsigned char>(token[0]));
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::string_view StripLeadingQuotes(std::string_view text) {
  for (;;) {
    if (!text.empty() && (std::isspace(static_cast<unsigned char>(text[0])) ||
                          text[0] == '"' || text[0] == '\'')) {
      text.remove_prefix(1);
    } else if (IsCurlyQuoteAt(text, 0, true) || IsCurlyQuoteAt(text, 0, false)) {
      text.remove_prefix(3);
    } else {
      return text;
    }
  }
}

constexpr std::string_view kThankPrefix = "Thank ";

bool HasThankPrefix(std::string_view text) {
  return StripLeadingQuotes(text).starts_with(kThankPrefix);
}

bool HasThankPrefixAnyCase(std::string_view text) {
  text = StripLeadingQuotes(text);
  if (text.size() < kThankPrefix.size()) return false;
  for (std::size_t i = 0; i < kThankPrefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[i])) !=
        std::tolower(static_cast<unsigned char>(kThankPrefix[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool IsKnownAbbreviation(std::string_view token) {
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), token) !=
         kAbbreviations.end();
}

std::vector<Sentence> Segment(std::string_view raw_text) {
  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string_view piece = Trim(raw_text.substr(begin, end - begin));
    if (!piece.empty()) {
      sentences.push_back(MakeSentence(std::string(piece),
                                       static_cast<int>(sentences.size())));
    }
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < raw_text.size()) {
    if (!IsTerminator(raw_text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < raw_text.size() && IsTerminator(raw_text[run_end])) {
      ++run_end;
    }
    const std::size_t end = SkipClosers(raw_text, run_end);
    std::size_t next = end;
    while (next < raw_text.size() &&
           std::isspace(static_cast<unsigned char>(raw_text[next]))) {
      ++next;
    }
    const bool followed_by_space = next > end;
    bool boundary = followed_by_space &&
                    (next == raw_text.size() || StartsSentence(raw_text, next));
    if (boundary && run_end - i == 1 && raw_text[i] == '.' &&
        SuppressedByAbbreviation(TokenEndingAt(raw_text, i))) {
      boundary = false;
    }
    if (boundary) {
      emit(start, end);
      start = end;
    }
    i = end > i ? end : i + 1;
  }
  emit(start, raw_text.size());
  return sentences;
}

bool IsExcludedFromScoring(const Sentence& sentence) {
  return sentence.word_count < 3 || HasThankPrefix(sentence.text);
}

FilterResult FilterForScoring(const Speech& speech) {
  FilterResult result;
  for (const Sentence& sentence : speech.sentences) {
    if (IsExcludedFromScoring(sentence)) {
      result.dropped.push_back(sentence);
    } else {
      if (HasThankPrefixAnyCase(sentence.text)) ++result.thank_case_variants;
      result.kept.push_back(sentence);
    }
  }
  return result;
}

}  // namespace popdisc
