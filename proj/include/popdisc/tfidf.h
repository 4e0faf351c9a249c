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

#ifndef POPDISC_TFIDF_H_
#define POPDISC_TFIDF_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace popdisc {

// Sparse feature vector; indices strictly increasing, weights finite.
class SparseVector {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  SparseVector() = default;
  // Sorts by index and sums duplicate indices.
  explicit SparseVector(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double Norm() const;
  double Dot(const SparseVector& other) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

double Cosine(const SparseVector& a, const SparseVector& b);

// Lower-cased word tokens. Tokens are maximal runs of alphanumeric characters
// (bytes >= 0x80 count as letters, except typographic quotes and dashes);
// an apostrophe between two letters stays inside the token.
std::vector<std::string> TokenizeForNgrams(std::string_view text);

// All n-grams with n in [min_n, max_n], tokens joined by a single space.
std::vector<std::string> ExtractNgrams(std::string_view text, int min_n,
                                       int max_n);

struct TfidfConfig {
  int min_df = 20;
  double max_df = 0.5;
  std::size_t max_features = 10000;
  int ngram_min = 1;
  int ngram_max = 3;
};

class TfidfModel {
 public:
  // Keeps n-grams whose document frequency lies in [min_df, max_df * D],
  // then the max_features most frequent (ties by n-gram string). Feature
  // indices follow lexicographic n-gram order. idf = ln((1+D)/(1+df)) + 1.
  static TfidfModel Fit(std::span<const std::string> documents,
                        const TfidfConfig& config = {});

  // Raw term counts times idf, L2-normalized. Out-of-vocabulary n-grams are
  // ignored, so an all-OOV sentence maps to the zero vector.
  SparseVector Transform(std::string_view text) const;

  const TfidfConfig& config() const { return config_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t num_documents() const { return num_documents_; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<double>& idf() const { return idf_; }
  const std::vector<std::size_t>& document_frequency() const { return df_; }
  // -1 when absent.
  long IndexOf(std::string_view ngram) const;
  // FNV-1a over the ordered vocabulary; ties classifiers to their features.
  std::uint64_t Fingerprint() const;

  std::string ToJson() const;
  static TfidfModel FromJson(std::string_view json_text);
  void Save(const std::filesystem::path& path) const;
  static TfidfModel Load(const std::filesystem::path& path);

  friend bool operator==(const TfidfModel& a, const TfidfModel& b) {
    return a.terms_ == b.terms_ && a.idf_ == b.idf_;
  }

 private:
  void BuildIndex();

  TfidfConfig config_;
  std::size_t num_documents_ = 0;
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::vector<std::size_t> df_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace popdisc

#endif  // POPDISC_TFIDF_H_
