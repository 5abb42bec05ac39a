#include "hanpiece/metrics.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "hanpiece/error.h"

namespace hanpiece {
namespace {

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace

void MetricsAccumulator::Add(std::span<const std::string> sentence) {
  ++sentences_;
  uint64_t subtokens = 0;
  for (const auto& token : sentence) {
    if (token == kUnkToken) {
      ++unks_;
    } else if (IsContinuation(token)) {
      ++subtokens;
    }
  }
  tokens_ += sentence.size();
  subtokens_ += subtokens;
  if (!sentence.empty()) {
    per_sentence_.push_back(100.0 * static_cast<double>(subtokens) /
                            static_cast<double>(sentence.size()));
  }
}

MetricsReport MetricsAccumulator::Finish() const {
  if (tokens_ == 0) throw Error(ErrorKind::kEmptyInput, "no tokens to measure");
  MetricsReport r;
  r.token_count = tokens_;
  r.sentence_count = sentences_;
  r.unk_count = unks_;
  r.subtoken_count = subtokens_;
  r.oov_rate = 100.0 * static_cast<double>(unks_) / static_cast<double>(tokens_);
  r.wsr = 100.0 * static_cast<double>(subtokens_) / static_cast<double>(tokens_);
  r.wsr_per_sentence = per_sentence_;

  const double n = static_cast<double>(per_sentence_.size());
  double sum = 0;
  for (double v : per_sentence_) sum += v;
  r.wsr_sentence_mean = sum / n;
  double squares = 0;
  for (double v : per_sentence_) squares += (v - r.wsr_sentence_mean) * (v - r.wsr_sentence_mean);
  r.wsr_sentence_std = std::sqrt(squares / n);
  return r;
}

MetricsReport CorpusMetrics(std::span<const TokenSequence> corpus) {
  MetricsAccumulator acc;
  for (const auto& sentence : corpus) acc.Add(sentence);
  return acc.Finish();
}

double VocabWser(const Vocabulary& vocab) {
  const size_t regular = vocab.size() - kSpecialTokens.size();
  if (regular == 0) return 0.0;
  size_t pieces = 0;
  for (size_t i = kSpecialTokens.size(); i < vocab.size(); ++i) {
    if (IsContinuation(vocab.entries()[i])) ++pieces;
  }
  return 100.0 * static_cast<double>(pieces) / static_cast<double>(regular);
}

void WriteMetricsTsv(std::ostream& out, const MetricsReport& r) {
  out << "oov_rate\twsr\twser\twsr_sentence_mean\twsr_sentence_std\ttoken_count\t"
         "sentence_count\n";
  out << Fixed(r.oov_rate) << '\t' << Fixed(r.wsr) << '\t'
      << (r.wser ? Fixed(*r.wser) : std::string("NA")) << '\t'
      << Fixed(r.wsr_sentence_mean) << '\t' << Fixed(r.wsr_sentence_std) << '\t'
      << r.token_count << '\t' << r.sentence_count << '\n';
}

void WriteMetricsSummary(std::ostream& out, const MetricsReport& r) {
  out << "sentences=" << r.sentence_count << " tokens=" << r.token_count
      << " oov=" << Fixed(r.oov_rate) << "% wsr=" << Fixed(r.wsr) << "%";
  if (r.wser) out << " wser=" << Fixed(*r.wser) << "%";
  out << " wsr/sentence=" << Fixed(r.wsr_sentence_mean) << "±"
      << Fixed(r.wsr_sentence_std) << "%\n";
}

void WritePerSentence(std::ostream& out, const MetricsReport& r) {
  for (double v : r.wsr_per_sentence) out << Fixed(v) << '\n';
}

}  // namespace hanpiece
