#include "hanpiece/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <variant>

#include "hanpiece/corpus.h"
#include "hanpiece/demo_analyzer.h"
#include "hanpiece/error.h"
#include "hanpiece/metrics.h"
#include "hanpiece/morph.h"
#include "hanpiece/parallel.h"
#include "hanpiece/pipeline.h"
#include "hanpiece/utf8.h"
#include "hanpiece/wordpiece.h"

namespace hanpiece {
namespace {

constexpr size_t kBatchSentences = 4096;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string mode;
  std::vector<std::string> modes;
  size_t vocab_size = 32000;
  std::vector<size_t> vocab_sizes;
  std::string vocab;
  std::string tagged;
  bool demo_analyzer = false;
  int min_eojeols = 3;
  std::string class_table;
  bool per_sentence = false;
  int jobs = 1;
  bool display = false;
  uint64_t min_frequency = 2;
  size_t max_token_length = 100;
  std::string report;
};

// Owns an opened file or borrows the caller's stream for "-".
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorKind::kIo, "cannot open " + path);
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorKind::kIo, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

PipelineMode RequireMode(const std::string& name) {
  auto mode = ParseMode(name);
  if (!mode) {
    throw UsageError("unknown mode '" + name +
                     "' (expected wp, wp-sd, morwp, morwp-sd or morwp-md)");
  }
  return *mode;
}

ClassificationTable LoadTable(const Options& opt) {
  if (opt.class_table.empty()) return ClassificationTable::Default();
  return ClassificationTable::FromFile(opt.class_table);
}

// One input sentence: a raw line or an analyzed sentence from a tagged file.
struct Unit {
  int line = 0;
  std::variant<std::string, AnalyzedSentence> content;
};

// Reads sentences in the form a mode needs:
//   Mor* + --demo-analyzer   raw lines, analyzed here
//   Mor*                     tagged TSV (--tagged FILE or the input stream)
//   WP + --tagged FILE       eojeol surfaces of the tagged corpus
//   WP                       raw lines
class SentenceSource {
 public:
  SentenceSource(PipelineMode mode, const Options& opt, std::istream& in,
                 const ClassificationTable& table)
      : mode_(mode), table_(table) {
    use_tagged_ = opt.tagged.size() > 0 || (IsMorphemeMode(mode) && !opt.demo_analyzer);
    if (use_tagged_) {
      tagged_input_ = std::make_unique<Input>(opt.tagged, in);
      reader_ = std::make_unique<TaggedCorpusReader>(tagged_input_->get(), table_);
    } else {
      raw_ = &in;
    }
    if (opt.demo_analyzer) analyzer_ = DemoAnalyzer::Builtin();
  }

  bool NextBatch(std::vector<Unit>* batch) {
    batch->clear();
    while (batch->size() < kBatchSentences) {
      if (use_tagged_) {
        auto sentence = reader_->Next();
        if (!sentence) break;
        batch->push_back(Unit{reader_->line_number(), std::move(*sentence)});
      } else {
        std::string line;
        if (!std::getline(*raw_, line)) break;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        batch->push_back(Unit{line_, std::move(line)});
      }
    }
    return !batch->empty();
  }

  std::vector<PreToken> ToPreTokens(const Unit& unit) const {
    try {
      if (const auto* raw = std::get_if<std::string>(&unit.content)) {
        if (IsMorphemeMode(mode_)) {
          return Pretokenize(analyzer_->Analyze(*raw, table_), mode_);
        }
        DecodeUtf8OrThrow(*raw);
        return Pretokenize(std::string_view(*raw), mode_);
      }
      const auto& sentence = std::get<AnalyzedSentence>(unit.content);
      if (IsMorphemeMode(mode_)) return Pretokenize(sentence, mode_);
      return Pretokenize(std::string_view(SentenceSurface(sentence)), mode_);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(unit.line) + ": " +
                                e.message());
    }
  }

 private:
  PipelineMode mode_;
  const ClassificationTable& table_;
  bool use_tagged_ = false;
  std::unique_ptr<Input> tagged_input_;
  std::unique_ptr<TaggedCorpusReader> reader_;
  std::istream* raw_ = nullptr;
  int line_ = 0;
  std::optional<DemoAnalyzer> analyzer_;
};

std::string PreTokenLine(const std::vector<PreToken>& tokens, bool display) {
  std::string line;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) line += ' ';
    if (tokens[i].continuation) line += kContinuationPrefix;
    line += display ? ToDisplayJamo(std::string_view(tokens[i].text)) : tokens[i].text;
  }
  return line;
}

void RunPretokenize(const Options& opt, std::istream& in, std::ostream& out) {
  const PipelineMode mode = RequireMode(opt.mode);
  const ClassificationTable table = LoadTable(opt);
  Input input(opt.input, in);
  Output output(opt.output, out);
  SentenceSource source(mode, opt, input.get(), table);
  std::vector<Unit> batch;
  while (source.NextBatch(&batch)) {
    const auto lines = ParallelMap(
        batch, [&](const Unit& u) { return PreTokenLine(source.ToPreTokens(u), opt.display); },
        opt.jobs);
    for (const auto& line : lines) output.get() << line << '\n';
  }
}

TrainResult TrainFrom(SentenceSource& source, const TrainConfig& config, int jobs) {
  WordPieceTrainer trainer(config);
  std::vector<Unit> batch;
  while (source.NextBatch(&batch)) {
    const auto pretokens = ParallelMap(
        batch, [&](const Unit& u) { return source.ToPreTokens(u); }, jobs);
    for (const auto& sentence : pretokens) trainer.Feed(sentence);
  }
  return trainer.Train();
}

TrainConfig MakeTrainConfig(const Options& opt, size_t vocab_size) {
  if (vocab_size <= kSpecialTokens.size()) {
    throw UsageError("--vocab-size must be greater than " +
                     std::to_string(kSpecialTokens.size()));
  }
  TrainConfig config;
  config.vocab_size = vocab_size;
  config.min_frequency = opt.min_frequency;
  config.max_token_length = opt.max_token_length;
  return config;
}

void RunTrainVocab(const Options& opt, std::istream& in, std::ostream& out) {
  const PipelineMode mode = RequireMode(opt.mode);
  const TrainConfig config = MakeTrainConfig(opt, opt.vocab_size);
  const ClassificationTable table = LoadTable(opt);
  Input input(opt.input, in);
  SentenceSource source(mode, opt, input.get(), table);
  const TrainResult result = TrainFrom(source, config, opt.jobs);
  SaveVocab(result.vocab, opt.vocab);
  if (!opt.report.empty()) {
    Output report(opt.report, out);
    WriteTrainReport(report.get(), result);
  }
}

void RunTokenize(const Options& opt, std::istream& in, std::ostream& out) {
  const PipelineMode mode = RequireMode(opt.mode);
  const Vocabulary vocab = LoadVocab(opt.vocab);
  const ClassificationTable table = LoadTable(opt);
  Input input(opt.input, in);
  Output output(opt.output, out);
  SentenceSource source(mode, opt, input.get(), table);
  std::vector<Unit> batch;
  while (source.NextBatch(&batch)) {
    const auto encoded = ParallelMap(
        batch, [&](const Unit& u) { return Encode(source.ToPreTokens(u), vocab); }, opt.jobs);
    for (const auto& sentence : encoded) WriteTokenizedLine(output.get(), sentence);
  }
}

void RunDetokenize(const Options& opt, std::istream& in, std::ostream& out) {
  const PipelineMode mode = RequireMode(opt.mode);
  Input input(opt.input, in);
  Output output(opt.output, out);
  TokenizedReader reader(input.get());
  while (auto tokens = reader.Next()) {
    try {
      output.get() << Decode(*tokens, mode) << '\n';
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(reader.line_number()) + ": " +
                                e.message());
    }
  }
}

void RunMetrics(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Input input(opt.input, in);
  Output output(opt.output, out);
  TokenizedReader reader(input.get());
  MetricsAccumulator acc;
  while (auto tokens = reader.Next()) acc.Add(*tokens);
  MetricsReport report = acc.Finish();
  if (!opt.vocab.empty()) report.wser = VocabWser(LoadVocab(opt.vocab));
  if (opt.per_sentence) {
    WritePerSentence(output.get(), report);
  } else {
    WriteMetricsTsv(output.get(), report);
  }
  WriteMetricsSummary(err, report);
}

struct CompareRow {
  PipelineMode mode;
  size_t vocab_size;
  MetricsReport report;
};

void RunCompare(const Options& opt, std::istream& in, std::ostream& out) {
  if (opt.modes.empty()) throw UsageError("--modes is required");
  if (opt.vocab_sizes.empty()) throw UsageError("--vocab-sizes is required");
  std::vector<PipelineMode> modes;
  for (const auto& name : opt.modes) modes.push_back(RequireMode(name));
  std::vector<TrainConfig> configs;
  for (size_t size : opt.vocab_sizes) configs.push_back(MakeTrainConfig(opt, size));

  const ClassificationTable table = LoadTable(opt);
  // WP modes need raw text, Mor* modes the analysis; both come from one
  // tagged corpus so every configuration sees the same sentences.
  Input input(opt.tagged.empty() ? opt.input : opt.tagged, in);
  const std::vector<AnalyzedSentence> corpus = ParseTaggedCorpus(input.get(), table);
  if (corpus.empty()) throw Error(ErrorKind::kEmptyCorpus, "no sentences in tagged input");

  struct Job {
    PipelineMode mode;
    TrainConfig config;
  };
  std::vector<Job> jobs;
  for (PipelineMode mode : modes) {
    for (const auto& config : configs) jobs.push_back(Job{mode, config});
  }
  const auto rows = ParallelMap(
      jobs,
      [&](const Job& job) {
        std::vector<std::vector<PreToken>> pretokens;
        pretokens.reserve(corpus.size());
        for (const auto& sentence : corpus) {
          pretokens.push_back(IsMorphemeMode(job.mode)
                                  ? Pretokenize(sentence, job.mode)
                                  : Pretokenize(std::string_view(SentenceSurface(sentence)),
                                                job.mode));
        }
        WordPieceTrainer trainer(job.config);
        for (const auto& sentence : pretokens) trainer.Feed(sentence);
        const Vocabulary vocab = trainer.Train().vocab;
        MetricsAccumulator acc;
        for (const auto& sentence : pretokens) acc.Add(Encode(sentence, vocab));
        MetricsReport report = acc.Finish();
        report.wser = VocabWser(vocab);
        return CompareRow{job.mode, job.config.vocab_size, std::move(report)};
      },
      opt.jobs);

  Output output(opt.output, out);
  output.get() << "mode\tvocab_size\toov_rate\twsr\twser\twsr_sentence_mean\twsr_sentence_std\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%s\t%zu\t%.4f\t%.4f\t%.4f\t%.4f\t%.4f\n",
                  std::string(ModeName(row.mode)).c_str(), row.vocab_size,
                  row.report.oov_rate, row.report.wsr, *row.report.wser,
                  row.report.wsr_sentence_mean, row.report.wsr_sentence_std);
    output.get() << buf;
  }
}

void RunClean(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  if (opt.min_eojeols < 1) throw UsageError("--min-eojeols must be at least 1");
  CleanConfig config;
  config.min_eojeols = opt.min_eojeols;
  Input input(opt.input, in);
  Output output(opt.output, out);
  const CleanStats stats = CleanCorpus(input.get(), output.get(), config, opt.jobs);
  err << "read=" << stats.lines_read << " written=" << stats.lines_written
      << " dropped_short=" << stats.dropped_short
      << " invalid_encoding=" << stats.invalid_encoding << '\n';
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Korean subword tokenization toolkit", "hanpiece"};
  app.require_subcommand(1);
  Options opt;

  const auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "Input file (default: stdin)");
    cmd->add_option("-o,--output", opt.output, "Output file (default: stdout)");
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  const auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode, "wp | wp-sd | morwp | morwp-sd | morwp-md")->required();
    cmd->add_option("--tagged", opt.tagged, "Pre-analyzed TSV corpus");
    cmd->add_flag("--demo-analyzer", opt.demo_analyzer,
                  "Analyze raw text with the built-in dictionary analyzer");
    cmd->add_option("--class-table", opt.class_table, "TAG=lexical|grammatical overrides");
  };
  const auto add_training = [&](CLI::App* cmd) {
    cmd->add_option("--min-frequency", opt.min_frequency, "Minimum pair frequency");
    cmd->add_option("--max-token-length", opt.max_token_length, "Longest merged token")
        ->check(CLI::PositiveNumber);
  };

  auto* clean = app.add_subcommand("clean", "Filter characters and short sentences");
  add_io(clean);
  add_jobs(clean);
  clean->add_option("--min-eojeols", opt.min_eojeols, "Drop shorter sentences");

  auto* pretok = app.add_subcommand("pretokenize", "Print pre-tokens per sentence");
  add_io(pretok);
  add_jobs(pretok);
  add_source(pretok);
  pretok->add_flag("--display", opt.display, "Show jamo as compatibility jamo");

  auto* train = app.add_subcommand("train-vocab", "Train a WordPiece vocabulary");
  add_io(train);
  add_jobs(train);
  add_source(train);
  add_training(train);
  train->add_option("--vocab-size", opt.vocab_size, "Target vocabulary size");
  train->add_option("--vocab", opt.vocab, "Output vocab.txt")->required();
  train->add_option("--report", opt.report, "Write a training report TSV");

  auto* tokenize = app.add_subcommand("tokenize", "Encode sentences with a vocabulary");
  add_io(tokenize);
  add_jobs(tokenize);
  add_source(tokenize);
  tokenize->add_option("--vocab", opt.vocab, "vocab.txt")->required();

  auto* detok = app.add_subcommand("detokenize", "Join tokens back into text");
  add_io(detok);
  detok->add_option("--mode", opt.mode, "Pipeline mode")->required();

  auto* metrics = app.add_subcommand("metrics", "OOV rate, WSR and WSER of tokenized text");
  add_io(metrics);
  metrics->add_option("--vocab", opt.vocab, "vocab.txt, enables WSER");
  metrics->add_flag("--per-sentence", opt.per_sentence, "One WSR value per sentence");

  auto* compare = app.add_subcommand("compare", "Train and measure several configurations");
  add_io(compare);
  add_jobs(compare);
  add_training(compare);
  compare->add_option("--modes", opt.modes, "Comma-separated modes")->delimiter(',');
  compare->add_option("--vocab-sizes", opt.vocab_sizes, "Comma-separated sizes")
      ->delimiter(',');
  compare->add_option("--tagged", opt.tagged, "Pre-analyzed TSV corpus");
  compare->add_option("--class-table", opt.class_table, "TAG=lexical|grammatical overrides");

  std::vector<std::string> argv_storage{"hanpiece"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*clean) {
      RunClean(opt, in, out, err);
    } else if (*pretok) {
      RunPretokenize(opt, in, out);
    } else if (*train) {
      RunTrainVocab(opt, in, out);
    } else if (*tokenize) {
      RunTokenize(opt, in, out);
    } else if (*detok) {
      RunDetokenize(opt, in, out);
    } else if (*metrics) {
      RunMetrics(opt, in, out, err);
    } else if (*compare) {
      RunCompare(opt, in, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace hanpiece
