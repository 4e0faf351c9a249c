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

#ifndef POPDISC_EVALUATION_H_
#define POPDISC_EVALUATION_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>

#include "popdisc/corpus.h"
#include "popdisc/predictions.h"

namespace popdisc {

// The three evaluated classes. N is positive when the label set is empty;
// a fully populist sentence is positive for both AE and PC.
enum class LabelClass { kNeutral = 0, kAntiElitism = 1, kPeopleCentrism = 2 };

inline constexpr std::array<LabelClass, 3> kLabelClasses = {
    LabelClass::kNeutral, LabelClass::kAntiElitism,
    LabelClass::kPeopleCentrism};

std::string_view ClassName(LabelClass cls);
LabelClass ParseLabelClass(std::string_view name);
bool HasClass(LabelSet labels, LabelClass cls);

struct ClassMetrics {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
  std::size_t true_negative = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::array<ClassMetrics, 3> per_class;
  double macro_f1 = 0.0;

  const ClassMetrics& at(LabelClass cls) const {
    return per_class[static_cast<int>(cls)];
  }
};

struct LabelPair {
  LabelSet gold;
  LabelSet predicted;
};

// Binary precision/recall/F1 per class; 0 when a denominator is 0.
EvalReport Evaluate(std::span<const LabelPair> pairs);
// Every gold sentence must be labeled and covered by `predictions`.
EvalReport Evaluate(const PredictionSet& predictions, const Corpus& gold);

// CSV: class,precision,recall,f1 rows for N, AE, PC and a macro row.
void WriteEvalCsv(const EvalReport& report, std::ostream& out);

}  // namespace popdisc

#endif  // POPDISC_EVALUATION_H_
