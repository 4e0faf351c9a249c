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

// popdisc: command-line front end for corpus ingestion, baselines, scoring,
// statistics, plots and prompt emission.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "popdisc/analysis.h"
#include "popdisc/baselines.h"
#include "popdisc/corpus.h"
#include "popdisc/errors.h"
#include "popdisc/evaluation.h"
#include "popdisc/predictions.h"
#include "popdisc/prompts.h"
#include "popdisc/scoring.h"
#include "popdisc/stats.h"
#include "popdisc/svg_plot.h"
#include "popdisc/tfidf.h"

namespace popdisc {
namespace {

namespace fs = std::filesystem;

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// Owns an output file or forwards to stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw InputError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void Close() {
    if (file_) {
      file_->close();
      if (!*file_) throw std::runtime_error("write failed");
    } else {
      std::cout.flush();
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void RequireFile(const std::string& path, const char* what) {
  if (!fs::is_regular_file(path)) {
    throw InputError(fmt::format("{} '{}' does not exist", what, path));
  }
}

Corpus LoadCorpus(const std::string& path, const std::string& schema) {
  RequireFile(path, "corpus");
  Corpus corpus = IngestJsonl(path, ParseIngestSchema(schema));
  if (corpus.speeches.empty()) {
    throw InputError("corpus '" + path + "' contains no records");
  }
  return corpus;
}

std::string ReadFile(const std::string& path) {
  RequireFile(path, "file");
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Bundle {
  TfidfModel tfidf;
  LinearSvm svm;
};

void SaveBundle(const Bundle& bundle, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["format"] = "popdisc-baseline";
  doc["version"] = 1;
  doc["tfidf"] = nlohmann::ordered_json::parse(bundle.tfidf.ToJson());
  doc["svm"] = nlohmann::ordered_json::parse(bundle.svm.ToJson());
  Output out(path);
  out.stream() << doc.dump() << '\n';
  out.Close();
}

Bundle LoadBundle(const std::string& path) {
  try {
    const auto doc = nlohmann::json::parse(ReadFile(path));
    if (doc.value("format", std::string()) != "popdisc-baseline") {
      throw InputError("'" + path + "' is not a baseline model bundle");
    }
    return {TfidfModel::FromJson(doc.at("tfidf").dump()),
            LinearSvm::FromJson(doc.at("svm").dump())};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(fmt::format("malformed model bundle '{}': {}", path, e.what()));
  }
}

void PrintDistribution(const LabelDistribution& d, std::ostream& out) {
  out << "class,count,percent\n";
  out << fmt::format("N,{},{:.1f}\n", d.neutral, d.percent(d.neutral));
  out << fmt::format("AE,{},{:.1f}\n", d.anti_elitism, d.percent(d.anti_elitism));
  out << fmt::format("PC,{},{:.1f}\n", d.people_centrism,
                     d.percent(d.people_centrism));
  out << fmt::format("AE+PC,{},{:.1f}\n", d.fully_populist,
                     d.percent(d.fully_populist));
  out << fmt::format("total,{},100.0\n", d.total);
}

struct FilterSummary {
  std::size_t total = 0;
  std::size_t dropped = 0;
  std::size_t dropped_populist = 0;
  std::size_t thank_case_variants = 0;
};

FilterSummary SummarizeFilter(const Corpus& corpus) {
  FilterSummary s;
  for (const Speech& speech : corpus.speeches) {
    const FilterResult r = FilterForScoring(speech);
    s.total += speech.size();
    s.dropped += r.dropped.size();
    s.thank_case_variants += static_cast<std::size_t>(r.thank_case_variants);
    for (const Sentence& sentence : r.dropped) {
      if (sentence.gold && sentence.gold->populist()) ++s.dropped_populist;
    }
  }
  return s;
}

void PrintFilterSummary(const FilterSummary& s, std::ostream& out) {
  out << fmt::format(
      "filter: kept {} of {} sentences ({:.2f}% excluded); {} excluded "
      "sentences carry a populist gold label; {} case variants of the thank "
      "prefix kept\n",
      s.total - s.dropped, s.total,
      s.total == 0 ? 0.0 : 100.0 * s.dropped / static_cast<double>(s.total),
      s.dropped, s.dropped_populist, s.thank_case_variants);
}

bool FullyLabeled(const Corpus& corpus) {
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      if (!sentence.gold) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

struct IngestArgs {
  std::string input;
  std::string schema = "sentences";
  std::string output;
};

int RunIngest(const IngestArgs& args) {
  const Corpus corpus = LoadCorpus(args.input, args.schema);
  if (!args.output.empty()) {
    Output out(args.output);
    WriteSentenceJsonl(corpus, out.stream());
    out.Close();
  } else {
    WriteSentenceJsonl(corpus, std::cout);
  }
  std::cerr << fmt::format("ingested {} speeches, {} sentences\n",
                           corpus.speeches.size(), corpus.sentence_count());
  if (FullyLabeled(corpus)) PrintDistribution(CorpusStats(corpus), std::cerr);
  return 0;
}

struct StatsArgs {
  std::string corpus;
  std::string schema = "sentences";
  std::string output;
};

int RunStats(const StatsArgs& args) {
  const Corpus corpus = LoadCorpus(args.corpus, args.schema);
  Output out(args.output);
  PrintDistribution(CorpusStats(corpus), out.stream());
  out.Close();
  PrintFilterSummary(SummarizeFilter(corpus), std::cerr);
  return 0;
}

struct TrainArgs {
  std::string train;
  std::string test;
  std::string baseline = "svm";
  std::string model_out;
  std::string report;
  std::string top_features_out;
  std::size_t top_k = 10;
  std::uint64_t seed = 0;
  int seeds = 10;
  bool independent = false;
  TfidfConfig tfidf;
  SvmConfig svm;
};

int RunTrainBaseline(const TrainArgs& args) {
  const Corpus train = LoadCorpus(args.train, "sentences");
  const Corpus test = LoadCorpus(args.test, "sentences");
  if (args.baseline == "dist-random") {
    if (args.seeds < 1) throw InputError("--seeds must be >= 1");
    const auto sampler = DistRandomSampler::Train(
        train, args.independent ? DistRandomSampler::Mode::kIndependent
                                : DistRandomSampler::Mode::kJoint);
    EvalReport mean;
    for (int i = 0; i < args.seeds; ++i) {
      const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
      const EvalReport r = Evaluate(sampler.Predict(test, seed), test);
      std::cerr << fmt::format("seed {}: macro-F1 {:.4f}\n", seed, r.macro_f1);
      for (int c = 0; c < 3; ++c) {
        mean.per_class[c].precision += r.per_class[c].precision / args.seeds;
        mean.per_class[c].recall += r.per_class[c].recall / args.seeds;
        mean.per_class[c].f1 += r.per_class[c].f1 / args.seeds;
      }
      mean.macro_f1 += r.macro_f1 / args.seeds;
    }
    Output out(args.report);
    WriteEvalCsv(mean, out.stream());
    out.Close();
    return 0;
  }
  if (args.baseline != "svm") {
    throw InputError("unknown baseline '" + args.baseline +
                     "' (expected svm|dist-random)");
  }
  std::vector<std::string> documents;
  for (const Speech& speech : train.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      documents.push_back(sentence.text);
    }
  }
  Bundle bundle{TfidfModel::Fit(documents, args.tfidf), {}};
  SvmConfig svm_config = args.svm;
  svm_config.seed = args.seed;
  bundle.svm = LinearSvm::Train(train, bundle.tfidf, svm_config);
  std::cerr << fmt::format("vocabulary: {} n-grams from {} sentences\n",
                           bundle.tfidf.size(), documents.size());
  if (!args.model_out.empty()) SaveBundle(bundle, args.model_out);

  const SvmPrediction prediction = bundle.svm.Predict(bundle.tfidf, test);
  const EvalReport report = Evaluate(prediction.predictions, test);
  std::cerr << fmt::format(
      "test macro-F1 {:.4f} (N {:.3f}, AE {:.3f}, PC {:.3f}); N head disagrees "
      "on {} sentences\n",
      report.macro_f1, report.at(LabelClass::kNeutral).f1,
      report.at(LabelClass::kAntiElitism).f1,
      report.at(LabelClass::kPeopleCentrism).f1,
      prediction.neutral_head_disagreements);
  Output out(args.report);
  WriteEvalCsv(report, out.stream());
  out.Close();

  if (!args.top_features_out.empty()) {
    Output top(args.top_features_out);
    top.stream() << "class,rank,ngram,weight\n";
    for (LabelClass cls : kLabelClasses) {
      const auto features = bundle.svm.TopFeatures(bundle.tfidf, cls, args.top_k);
      for (std::size_t i = 0; i < features.size(); ++i) {
        top.stream() << fmt::format("{},{},\"{}\",{:.6f}\n", ClassName(cls), i + 1,
                                    features[i].first, features[i].second);
      }
    }
    top.Close();
  }
  return 0;
}

struct PredictArgs {
  std::string model;
  std::string corpus;
  std::string output;
};

int RunPredict(const PredictArgs& args) {
  const Bundle bundle = LoadBundle(args.model);
  const Corpus corpus = LoadCorpus(args.corpus, "sentences");
  const SvmPrediction prediction = bundle.svm.Predict(bundle.tfidf, corpus);
  Output out(args.output);
  WritePredictions(prediction.predictions, corpus, out.stream());
  out.Close();
  std::cerr << fmt::format("predicted {} sentences; N head disagrees on {}\n",
                           prediction.predictions.size(),
                           prediction.neutral_head_disagreements);
  return 0;
}

struct ImportArgs {
  std::string input;
  std::string corpus;
  std::string option_order = "forward";
  std::string output;
};

int RunImportPredictions(const ImportArgs& args) {
  const Corpus corpus = LoadCorpus(args.corpus, "sentences");
  RequireFile(args.input, "predictions");
  const PredictionSet predictions =
      ImportPredictions(args.input, corpus, ParseOptionOrder(args.option_order));
  Output out(args.output);
  WritePredictions(predictions, corpus, out.stream());
  out.Close();
  std::cerr << fmt::format("imported {} predictions\n", predictions.size());
  return 0;
}

struct EvaluateArgs {
  std::string predictions;
  std::string gold;
  std::string option_order = "forward";
  std::string output;
};

int RunEvaluate(const EvaluateArgs& args) {
  const Corpus gold = LoadCorpus(args.gold, "sentences");
  RequireFile(args.predictions, "predictions");
  const PredictionSet predictions = ImportPredictions(
      args.predictions, gold, ParseOptionOrder(args.option_order));
  const EvalReport report = Evaluate(predictions, gold);
  Output out(args.output);
  WriteEvalCsv(report, out.stream());
  out.Close();
  return 0;
}

struct ScoreArgs {
  std::string corpus;
  std::string predictions;
  bool use_gold = false;
  std::string option_order = "forward";
  std::string output;
  ScoreConfig config;
};

int RunScore(const ScoreArgs& args) {
  args.config.Validate();
  if (args.predictions.empty() == !args.use_gold) {
    throw InputError("score needs exactly one of --predictions or --gold");
  }
  const Corpus corpus = LoadCorpus(args.corpus, "sentences");
  std::optional<PredictionSet> predictions;
  if (!args.use_gold) {
    RequireFile(args.predictions, "predictions");
    predictions = ImportPredictions(args.predictions, corpus,
                                    ParseOptionOrder(args.option_order));
  }
  Output out(args.output);
  WriteScoreCsvHeader(out.stream());
  std::size_t sentences = 0, kept = 0, paired = 0, pv_defined = 0;
  std::vector<double> pdi, wpdi;
  for (const Speech& speech : corpus.speeches) {
    const auto labels = predictions ? PredictedLabels(speech, *predictions)
                                    : GoldLabels(speech);
    const SpeechScore score = ScoreSpeech(speech, labels, args.config);
    WriteScoreCsvRow(speech, score, out.stream());
    sentences += speech.size();
    kept += score.n_scored;
    paired += 2 * static_cast<std::size_t>(score.adjacency_pairs);
    if (score.pv.at(PopulismType::kOverall)) ++pv_defined;
    pdi.push_back(score.pdi);
    wpdi.push_back(score.wpdi);
  }
  out.Close();
  std::cerr << fmt::format(
      "scored {} speeches ({} with PV defined); kept {} of {} sentences; "
      "adjacency bonus on {} sentences ({:.4f}% of kept)\n",
      corpus.speeches.size(), pv_defined, kept, sentences, paired,
      kept == 0 ? 0.0 : 100.0 * paired / static_cast<double>(kept));
  try {
    std::cerr << fmt::format("speech-level Pearson r(PDI, WPDI) = {:.4f}\n",
                             stats::Pearson(pdi, wpdi));
  } catch (const DegenerateDataError&) {
  }
  return 0;
}

struct AnalyzeArgs {
  std::string scores;
  std::string grouping = "campaign";
  std::string metric = "pdi";
  double alpha = 0.05;
  int family_size = 4;
  std::string output;
  ScoreConfig config;
};

std::vector<ScoreRecord> LoadScores(const std::string& path) {
  RequireFile(path, "score CSV");
  std::ifstream in(path, std::ios::binary);
  std::vector<ScoreRecord> records = ReadScoreCsv(in);
  if (records.empty()) throw InputError("score CSV '" + path + "' has no rows");
  return records;
}

int RunAnalyze(const AnalyzeArgs& args) {
  const std::vector<ScoreRecord> records = LoadScores(args.scores);
  std::vector<StatsRow> rows;
  switch (ParseGrouping(args.grouping)) {
    case Grouping::kCampaign:
      rows = AnalyzeCampaigns(records, ParseMetric(args.metric), args.alpha);
      break;
    case Grouping::kSwingBallotpedia:
      rows = AnalyzeSwing(records, true, args.alpha, args.family_size);
      break;
    case Grouping::kSwingAttention:
      rows = AnalyzeSwing(records, false, args.alpha, args.family_size);
      break;
    case Grouping::kBins:
      rows = AnalyzeBins(records, args.config, args.alpha);
      break;
  }
  Output out(args.output);
  WriteStatsCsv(rows, out.stream());
  out.Close();
  return 0;
}

struct PlotArgs {
  std::string scores;
  std::string stats;
  std::string out_dir = ".";
};

int RunPlot(const PlotArgs& args) {
  const std::vector<ScoreRecord> records = LoadScores(args.scores);
  std::vector<StatsRow> bin_stats;
  if (!args.stats.empty()) {
    RequireFile(args.stats, "stats CSV");
    std::ifstream in(args.stats, std::ios::binary);
    bin_stats = ReadStatsCsv(in);
  }
  fs::create_directories(args.out_dir);
  auto write = [&](const char* name, const std::string& svg) {
    Output out((fs::path(args.out_dir) / name).string());
    out.stream() << svg;
    out.Close();
  };
  write("pdi_timeline.svg", PlotPdiTimeline(records));
  write("campaign_means.svg", PlotCampaignMeans(records));
  write("populist_volume.svg", PlotPopulistVolume(records, bin_stats));
  return 0;
}

struct PromptArgs {
  std::string corpus;
  std::string train;
  std::string model;
  std::string setting = "base";
  int k = 0;
  int context_window = 5;
  std::uint64_t seed = 0;
  std::string option_order = "forward";
  std::string output;
  std::string answers;
  TfidfConfig tfidf;
};

int RunPrompts(const PromptArgs& args) {
  PromptSpec spec;
  spec.setting = ParsePromptSetting(args.setting);
  spec.k = args.k;
  spec.context_window = args.context_window;
  spec.seed = args.seed;
  spec.option_order = ParseOptionOrder(args.option_order);
  spec.Validate();

  const Corpus corpus = LoadCorpus(args.corpus, "sentences");
  std::optional<Corpus> train;
  std::optional<TfidfModel> tfidf;
  if (!args.train.empty()) train = LoadCorpus(args.train, "sentences");
  if (spec.setting == PromptSetting::kRagShot) {
    if (!train) throw InputError("rag-shot needs --train");
    if (!args.model.empty()) {
      tfidf = LoadBundle(args.model).tfidf;
    } else {
      std::vector<std::string> documents;
      for (const Speech& speech : train->speeches) {
        for (const Sentence& sentence : speech.sentences) {
          documents.push_back(sentence.text);
        }
      }
      tfidf = TfidfModel::Fit(documents, args.tfidf);
    }
  }
  Output out(args.output);
  std::optional<Output> answers;
  if (!args.answers.empty()) answers.emplace(args.answers);
  const std::size_t written = EmitPromptFile(
      std::span<const PromptSpec>(&spec, 1), corpus, train ? &*train : nullptr,
      tfidf ? &*tfidf : nullptr, out.stream(),
      answers ? &answers->stream() : nullptr);
  out.Close();
  if (answers) answers->Close();
  std::cerr << fmt::format("wrote {} prompts\n", written);
  return 0;
}

void AddTfidfOptions(CLI::App* cmd, TfidfConfig& config) {
  cmd->add_option("--min-df", config.min_df, "Minimum document count")
      ->capture_default_str();
  cmd->add_option("--max-df", config.max_df, "Maximum document fraction")
      ->capture_default_str();
  cmd->add_option("--max-features", config.max_features, "Vocabulary cap")
      ->capture_default_str();
}

void AddScoreOptions(CLI::App* cmd, ScoreConfig& config) {
  cmd->add_option("--full-boost", config.full_boost,
                  "Score of a fully populist sentence")
      ->capture_default_str();
  cmd->add_option("--adjacency", config.adjacency_multiplier,
                  "Multiplier for adjacent AE/PC pairs")
      ->capture_default_str();
  cmd->add_option("--scale", config.scale, "Index scale")->capture_default_str();
  cmd->add_option("--bins", config.bins, "Opening, body and closing fractions")
      ->expected(3);
  cmd->add_flag("--pair-fully-populist", config.fully_populist_in_pairs,
                "Let fully populist sentences join adjacency pairs");
}

int Main(int argc, char** argv) {
  CLI::App app{"popdisc: populist discourse corpus toolkit"};
  app.set_config("--config", "", "TOML-style configuration file");
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Read JSONL and emit sentence JSONL");
  c_ingest->add_option("--input,input", ingest.input, "Input JSONL")->required();
  c_ingest->add_option("--schema", ingest.schema, "sentences|raw")
      ->capture_default_str();
  c_ingest->add_option("--output,-o", ingest.output, "Sentence JSONL output");

  StatsArgs stats_args;
  auto* c_stats = app.add_subcommand("stats", "Label distribution and filter counts");
  c_stats->add_option("--corpus,corpus", stats_args.corpus, "Sentence JSONL")
      ->required();
  c_stats->add_option("--schema", stats_args.schema, "sentences|raw")
      ->capture_default_str();
  c_stats->add_option("--output,-o", stats_args.output, "CSV output");

  TrainArgs train;
  auto* c_train = app.add_subcommand("train-baseline", "Train and evaluate a baseline");
  c_train->add_option("--train", train.train, "Training sentence JSONL")->required();
  c_train->add_option("--test", train.test, "Test sentence JSONL")->required();
  c_train->add_option("--baseline", train.baseline, "svm|dist-random")
      ->capture_default_str();
  c_train->add_option("--model-out", train.model_out, "Model bundle output");
  c_train->add_option("--report,-o", train.report, "Evaluation CSV output");
  c_train->add_option("--top-features-out", train.top_features_out,
                      "CSV of top-weighted n-grams per class");
  c_train->add_option("--top-k", train.top_k, "Features per class")
      ->capture_default_str();
  c_train->add_option("--seed", train.seed, "Random seed")->capture_default_str();
  c_train->add_option("--seeds", train.seeds, "Dist. random repetitions")
      ->capture_default_str();
  c_train->add_flag("--independent", train.independent,
                    "Dist. random draws AE and PC independently");
  c_train->add_option("--c", train.svm.c, "SVM C")->capture_default_str();
  c_train->add_option("--epochs", train.svm.epochs, "SVM epochs")
      ->capture_default_str();
  c_train->add_option("--positive-weight", train.svm.positive_weight,
                      "Loss weight of positive examples")
      ->capture_default_str();
  AddTfidfOptions(c_train, train.tfidf);

  PredictArgs predict;
  auto* c_predict = app.add_subcommand("predict", "Label a corpus with a trained SVM");
  c_predict->add_option("--model", predict.model, "Model bundle")->required();
  c_predict->add_option("--corpus", predict.corpus, "Sentence JSONL")->required();
  c_predict->add_option("--output,-o", predict.output, "Prediction JSONL");

  ImportArgs import;
  auto* c_import = app.add_subcommand("import-predictions",
                                      "Validate and normalize external predictions");
  c_import->add_option("--input", import.input, "Prediction JSONL")->required();
  c_import->add_option("--corpus", import.corpus, "Sentence JSONL")->required();
  c_import->add_option("--option-order", import.option_order, "forward|reversed")
      ->capture_default_str();
  c_import->add_option("--output,-o", import.output, "Normalized JSONL");

  EvaluateArgs evaluate;
  auto* c_eval = app.add_subcommand("evaluate", "Per-class and macro F1");
  c_eval->add_option("--predictions,--pred", evaluate.predictions,
                     "Prediction JSONL (or a labeled sentence JSONL)")
      ->required();
  c_eval->add_option("--gold", evaluate.gold, "Gold sentence JSONL")->required();
  c_eval->add_option("--option-order", evaluate.option_order, "forward|reversed")
      ->capture_default_str();
  c_eval->add_option("--output,-o", evaluate.output, "Evaluation CSV");

  ScoreArgs score;
  auto* c_score = app.add_subcommand("score", "Per-speech PDI, WPDI and PV");
  c_score->add_option("--corpus", score.corpus, "Sentence JSONL")->required();
  c_score->add_option("--predictions", score.predictions, "Prediction JSONL");
  c_score->add_flag("--gold", score.use_gold, "Score gold labels");
  c_score->add_option("--option-order", score.option_order, "forward|reversed")
      ->capture_default_str();
  c_score->add_option("--output,-o", score.output, "Score CSV");
  AddScoreOptions(c_score, score.config);

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Statistical tests on scores");
  c_analyze->add_option("--scores", analyze.scores, "Score CSV")->required();
  c_analyze->add_option("--grouping", analyze.grouping,
                        "campaign|swing-ballotpedia|swing-attention|bins")
      ->capture_default_str();
  c_analyze->add_option("--metric", analyze.metric, "pdi|wpdi (campaign)")
      ->capture_default_str();
  c_analyze->add_option("--alpha", analyze.alpha, "Family-wise alpha")
      ->capture_default_str();
  c_analyze->add_option("--family-size", analyze.family_size,
                        "Bonferroni family size for swing tests")
      ->capture_default_str();
  c_analyze->add_option("--output,-o", analyze.output, "Stats CSV");
  c_analyze->add_option("--bins", analyze.config.bins, "Bin fractions")->expected(3);

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot", "SVG charts from a score CSV");
  c_plot->add_option("--scores", plot.scores, "Score CSV")->required();
  c_plot->add_option("--stats", plot.stats, "Bin stats CSV for significance stars");
  c_plot->add_option("--out-dir", plot.out_dir, "Output directory")
      ->capture_default_str();

  PromptArgs prompts;
  auto* c_prompts = app.add_subcommand("prompts", "Emit LLM prompt JSONL");
  c_prompts->add_option("--corpus", prompts.corpus, "Target sentence JSONL")
      ->required();
  c_prompts->add_option("--train", prompts.train, "Training sentence JSONL");
  c_prompts->add_option("--model", prompts.model,
                        "Model bundle whose TF-IDF drives retrieval");
  c_prompts->add_option("--setting", prompts.setting,
                        "base|context-aware|distribution-aware|k-shot|rag-shot")
      ->capture_default_str();
  c_prompts->add_option("--k", prompts.k, "Examples for k-shot / rag-shot");
  c_prompts->add_option("--context-window", prompts.context_window,
                        "Preceding sentences (<= 5)")
      ->capture_default_str();
  c_prompts->add_option("--seed", prompts.seed, "K-shot sampling seed");
  c_prompts->add_option("--option-order", prompts.option_order, "forward|reversed")
      ->capture_default_str();
  c_prompts->add_option("--output,-o", prompts.output, "Prompt JSONL");
  c_prompts->add_option("--answers", prompts.answers, "Answer-key JSONL");
  AddTfidfOptions(c_prompts, prompts.tfidf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: code=" << kExitInput << ": " << e.what() << '\n';
    return kExitInput;
  }

  if (c_ingest->parsed()) return RunIngest(ingest);
  if (c_stats->parsed()) return RunStats(stats_args);
  if (c_train->parsed()) return RunTrainBaseline(train);
  if (c_predict->parsed()) return RunPredict(predict);
  if (c_import->parsed()) return RunImportPredictions(import);
  if (c_eval->parsed()) return RunEvaluate(evaluate);
  if (c_score->parsed()) return RunScore(score);
  if (c_analyze->parsed()) return RunAnalyze(analyze);
  if (c_plot->parsed()) return RunPlot(plot);
  if (c_prompts->parsed()) return RunPrompts(prompts);
  return kExitInput;
}

}  // namespace
}  // namespace popdisc

int main(int argc, char** argv) {
  try {
    return popdisc::Main(argc, argv);
  } catch (const popdisc::InputError& e) {
    std::cerr << "error: code=" << popdisc::kExitInput << ": " << e.what() << '\n';
    return popdisc::kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: code=" << popdisc::kExitInternal << ": " << e.what()
              << '\n';
    return popdisc::kExitInternal;
  }
}
