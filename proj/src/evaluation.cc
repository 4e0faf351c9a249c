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

#include "popdisc/evaluation.h"

#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "popdisc/errors.h"

namespace popdisc {

std::string_view ClassName(LabelClass cls) {
  switch (cls) {
    case LabelClass::kNeutral: return "N";
    case LabelClass::kAntiElitism: return "AE";
    case LabelClass::kPeopleCentrism: return "PC";
  }
  return "N";
}

LabelClass ParseLabelClass(std::string_view name) {
  if (name == "N" || name == "n" || name == "neutral") {
    return LabelClass::kNeutral;
  }
  if (name == "AE" || name == "ae") return LabelClass::kAntiElitism;
  if (name == "PC" || name == "pc") return LabelClass::kPeopleCentrism;
  throw InputError("unknown class '" + std::string(name) +
                   "' (expected N|AE|PC)");
}

bool HasClass(LabelSet labels, LabelClass cls) {
  switch (cls) {
    case LabelClass::kNeutral: return labels.neutral();
    case LabelClass::kAntiElitism: return labels.anti_elitism;
    case LabelClass::kPeopleCentrism: return labels.people_centrism;
  }
  return false;
}

EvalReport Evaluate(std::span<const LabelPair> pairs) {
  EvalReport report;
  for (LabelClass cls : kLabelClasses) {
    ClassMetrics& m = report.per_class[static_cast<int>(cls)];
    for (const LabelPair& pair : pairs) {
      const bool gold = HasClass(pair.gold, cls);
      const bool pred = HasClass(pair.predicted, cls);
      if (gold && pred) {
        ++m.true_positive;
      } else if (pred) {
        ++m.false_positive;
      } else if (gold) {
        ++m.false_negative;
      } else {
        ++m.true_negative;
      }
    }
    const auto tp = static_cast<double>(m.true_positive);
    const std::size_t predicted = m.true_positive + m.false_positive;
    const std::size_t actual = m.true_positive + m.false_negative;
    m.precision = predicted == 0 ? 0.0 : tp / static_cast<double>(predicted);
    m.recall = actual == 0 ? 0.0 : tp / static_cast<double>(actual);
    m.f1 = (m.precision + m.recall) == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  report.macro_f1 =
      (report.per_class[0].f1 + report.per_class[1].f1 + report.per_class[2].f1) /
      3.0;
  return report;
}

EvalReport Evaluate(const PredictionSet& predictions, const Corpus& gold) {
  CheckCoverage(predictions, gold);
  std::vector<LabelPair> pairs;
  pairs.reserve(gold.sentence_count());
  for (const Speech& speech : gold.speeches) {
    const auto predicted = PredictedLabels(speech, predictions);
    for (std::size_t i = 0; i < speech.size(); ++i) {
      const Sentence& sentence = speech.sentences[i];
      if (!sentence.gold) {
        throw InputError(fmt::format("speech '{}' sentence {} has no gold label",
                                     speech.id, sentence.index));
      }
      pairs.push_back({*sentence.gold, *predicted[i]});
    }
  }
  return Evaluate(pairs);
}

void WriteEvalCsv(const EvalReport& report, std::ostream& out) {
  out << "class,precision,recall,f1\n";
  double precision = 0.0, recall = 0.0;
  for (LabelClass cls : kLabelClasses) {
    const ClassMetrics& m = report.at(cls);
    out << fmt::format("{},{:.6f},{:.6f},{:.6f}\n", ClassName(cls),
                       m.precision, m.recall, m.f1);
    precision += m.precision;
    recall += m.recall;
  }
  out << fmt::format("macro,{:.6f},{:.6f},{:.6f}\n", precision / 3.0,
                     recall / 3.0, report.macro_f1);
}

}  // namespace popdisc
