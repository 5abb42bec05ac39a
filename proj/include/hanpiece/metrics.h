#ifndef HANPIECE_METRICS_H_
#define HANPIECE_METRICS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hanpiece/wordpiece.h"

namespace hanpiece {

// All rates are percentages in [0, 100].
struct MetricsReport {
  double oov_rate = 0;  // [UNK] tokens / tokens
  double wsr = 0;       // ## tokens / tokens
  std::optional<double> wser;  // needs a vocabulary
  double wsr_sentence_mean = 0;
  double wsr_sentence_std = 0;  // population
  uint64_t token_count = 0;
  uint64_t sentence_count = 0;
  uint64_t unk_count = 0;
  uint64_t subtoken_count = 0;
  // One entry per sentence that has at least one token.
  std::vector<double> wsr_per_sentence;
};

// Streaming accumulator. [UNK] counts toward the denominator only, never as
// a ## subtoken. Empty sentences are counted but have no per-sentence WSR.
class MetricsAccumulator {
 public:
  void Add(std::span<const std::string> sentence);
  // Throws Error(kEmptyInput) when no tokens were seen.
  MetricsReport Finish() const;

 private:
  uint64_t tokens_ = 0;
  uint64_t unks_ = 0;
  uint64_t subtokens_ = 0;
  uint64_t sentences_ = 0;
  std::vector<double> per_sentence_;
};

MetricsReport CorpusMetrics(std::span<const TokenSequence> corpus);

// ## entries / non-special entries; 0 when only specials are present.
double VocabWser(const Vocabulary& vocab);

// Header plus one row: oov_rate wsr wser wsr_sentence_mean wsr_sentence_std
// token_count sentence_count. wser is "NA" when unset.
void WriteMetricsTsv(std::ostream& out, const MetricsReport& report);
void WriteMetricsSummary(std::ostream& out, const MetricsReport& report);
void WritePerSentence(std::ostream& out, const MetricsReport& report);

}  // namespace hanpiece

#endif  // HANPIECE_METRICS_H_
