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

#include "popdisc/tfidf.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "popdisc/errors.h"

namespace popdisc {
namespace {

enum class CharClass { kWord, kApostrophe, kSeparator };

// Classifies the (possibly multi-byte) character at `i` and reports its width.
CharClass Classify(std::string_view text, std::size_t i, std::size_t* width) {
  const auto c = static_cast<unsigned char>(text[i]);
  *width = 1;
  if (c < 0x80) {
    if (std::isalnum(c)) return CharClass::kWord;
    return c == '\'' ? CharClass::kApostrophe : CharClass::kSeparator;
  }
  if (c == 0xE2 && i + 2 < text.size() &&
      static_cast<unsigned char>(text[i + 1]) == 0x80) {
    const auto third = static_cast<unsigned char>(text[i + 2]);
    switch (third) {
      case 0x99:  // right single quote, used as apostrophe
        *width = 3;
        return CharClass::kApostrophe;
      case 0x93: case 0x94: case 0x98: case 0x9C: case 0x9D: case 0xA6:
        *width = 3;
        return CharClass::kSeparator;
      default:
        break;
    }
  }
  return CharClass::kWord;
}

constexpr int kFormatVersion = 1;

}  // namespace

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const Entry& entry : entries) {
    if (!entries_.empty() && entries_.back().first == entry.first) {
      entries_.back().second += entry.second;
    } else {
      entries_.push_back(entry);
    }
  }
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (const auto& [index, weight] : entries_) sum += weight * weight;
  return std::sqrt(sum);
}

double SparseVector::Dot(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  const double norms = a.Norm() * b.Norm();
  if (norms == 0.0) return 0.0;
  return std::clamp(a.Dot(b) / norms, -1.0, 1.0);
}

std::vector<std::string> TokenizeForNgrams(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t width = 1;
    const CharClass cls = Classify(text, i, &width);
    if (cls == CharClass::kWord) {
      for (std::size_t k = 0; k < width; ++k) {
        current.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(text[i + k]))));
      }
    } else {
      std::size_t next_width = 1;
      const bool inner_apostrophe =
          cls == CharClass::kApostrophe && !current.empty() &&
          i + width < text.size() &&
          Classify(text, i + width, &next_width) == CharClass::kWord;
      if (inner_apostrophe) {
        current.push_back('\'');
      } else if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    }
    i += width;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> ExtractNgrams(std::string_view text, int min_n,
                                       int max_n) {
  const std::vector<std::string> tokens = TokenizeForNgrams(text);
  std::vector<std::string> ngrams;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
      std::string gram = tokens[start];
      for (int k = 1; k < n; ++k) {
        gram.push_back(' ');
        gram += tokens[start + k];
      }
      ngrams.push_back(std::move(gram));
    }
  }
  return ngrams;
}

TfidfModel TfidfModel::Fit(std::span<const std::string> documents,
                           const TfidfConfig& config) {
  if (documents.empty()) throw InputError("cannot fit TF-IDF on an empty corpus");
  if (config.ngram_min < 1 || config.ngram_max < config.ngram_min) {
    throw InputError("invalid n-gram range");
  }
  std::unordered_map<std::string, std::size_t> df;
  for (const std::string& doc : documents) {
    std::vector<std::string> grams =
        ExtractNgrams(doc, config.ngram_min, config.ngram_max);
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    for (std::string& gram : grams) ++df[std::move(gram)];
  }

  const double num_docs = static_cast<double>(documents.size());
  const double ceiling = config.max_df * num_docs;
  std::vector<std::pair<std::string, std::size_t>> candidates;
  for (auto& [gram, count] : df) {
    if (count >= static_cast<std::size_t>(std::max(config.min_df, 0)) &&
        static_cast<double>(count) <= ceiling) {
      candidates.emplace_back(gram, count);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (candidates.size() > config.max_features) {
    candidates.resize(config.max_features);
  }
  std::sort(candidates.begin(), candidates.end());

  TfidfModel model;
  model.config_ = config;
  model.num_documents_ = documents.size();
  for (auto& [gram, count] : candidates) {
    model.idf_.push_back(
        std::log((1.0 + num_docs) / (1.0 + static_cast<double>(count))) + 1.0);
    model.df_.push_back(count);
    model.terms_.push_back(std::move(gram));
  }
  model.BuildIndex();
  return model;
}

void TfidfModel::BuildIndex() {
  index_.clear();
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
  }
}

SparseVector TfidfModel::Transform(std::string_view text) const {
  std::vector<SparseVector::Entry> counts;
  for (const std::string& gram :
       ExtractNgrams(text, config_.ngram_min, config_.ngram_max)) {
    auto it = index_.find(gram);
    if (it != index_.end()) counts.emplace_back(it->second, 1.0);
  }
  SparseVector merged(std::move(counts));
  std::vector<SparseVector::Entry> weighted(merged.entries().begin(),
                                            merged.entries().end());
  double norm = 0.0;
  for (auto& [index, weight] : weighted) {
    weight *= idf_[index];
    norm += weight * weight;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (auto& entry : weighted) entry.second /= norm;
  }
  return SparseVector(std::move(weighted));
}

long TfidfModel::IndexOf(std::string_view ngram) const {
  auto it = index_.find(std::string(ngram));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::uint64_t TfidfModel::Fingerprint() const {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const std::string& term : terms_) {
    for (unsigned char c : term) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
    hash ^= 0xFF;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string TfidfModel::ToJson() const {
  nlohmann::ordered_json doc;
  doc["version"] = kFormatVersion;
  doc["config"] = {{"min_df", config_.min_df},
                   {"max_df", config_.max_df},
                   {"max_features", config_.max_features},
                   {"ngram_range", {config_.ngram_min, config_.ngram_max}}};
  doc["num_documents"] = num_documents_;
  nlohmann::ordered_json vocab = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    vocab.push_back({terms_[i], i});
  }
  doc["vocab"] = std::move(vocab);
  doc["idf"] = idf_;
  doc["df"] = df_;
  return doc.dump();
}

TfidfModel TfidfModel::FromJson(std::string_view json_text) {
  TfidfModel model;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (doc.at("version").get<int>() != kFormatVersion) {
      throw InputError(fmt::format("unsupported TF-IDF model version {}",
                                   doc.at("version").dump()));
    }
    const auto& config = doc.at("config");
    model.config_.min_df = config.at("min_df").get<int>();
    model.config_.max_df = config.at("max_df").get<double>();
    model.config_.max_features = config.at("max_features").get<std::size_t>();
    model.config_.ngram_min = config.at("ngram_range").at(0).get<int>();
    model.config_.ngram_max = config.at("ngram_range").at(1).get<int>();
    model.num_documents_ = doc.value("num_documents", std::size_t{0});
    const auto& vocab = doc.at("vocab");
    model.terms_.assign(vocab.size(), std::string());
    std::vector<bool> seen(vocab.size(), false);
    for (const auto& pair : vocab) {
      const auto index = pair.at(1).get<std::size_t>();
      if (index >= vocab.size() || seen[index]) {
        throw InputError("TF-IDF vocabulary indices are not a permutation");
      }
      seen[index] = true;
      model.terms_[index] = pair.at(0).get<std::string>();
    }
    model.idf_ = doc.at("idf").get<std::vector<double>>();
    if (model.idf_.size() != model.terms_.size()) {
      throw InputError("TF-IDF idf length does not match vocabulary");
    }
    if (doc.contains("df")) {
      model.df_ = doc.at("df").get<std::vector<std::size_t>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed TF-IDF model: ") + e.what());
  }
  model.BuildIndex();
  return model;
}

void TfidfModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << ToJson() << '\n';
}

TfidfModel TfidfModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

}  // namespace popdisc
