#ifndef HANPIECE_CORPUS_H_
#define HANPIECE_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hanpiece/hangul.h"
#include "hanpiece/wordpiece.h"

namespace hanpiece {

struct CleanConfig {
  int min_eojeols = 3;
  std::set<CharClass> allowed = {CharClass::kAscii, CharClass::kHangulSyllable,
                                 CharClass::kHangulJamo};
};

struct CleanStats {
  uint64_t lines_read = 0;
  uint64_t lines_written = 0;
  uint64_t dropped_short = 0;
  uint64_t invalid_encoding = 0;
};

// Deletes disallowed scalars, collapses whitespace runs to one space, trims,
// and drops the line (nullopt) when fewer than min_eojeols remain. Space,
// tab and newline survive any class filter. Throws Error(kInvalidEncoding).
std::optional<std::string> CleanLine(std::string_view line, const CleanConfig& config);

// Line-streaming cleaner. Malformed UTF-8 lines are skipped and counted.
// With jobs > 1, batches of lines are cleaned in parallel; output order is
// the input order.
CleanStats CleanCorpus(std::istream& in, std::ostream& out, const CleanConfig& config,
                       int jobs = 1);

// Tokenized files: one sentence per line, tokens separated by one space. An
// empty line is an empty sentence.
void WriteTokenizedLine(std::ostream& out, const TokenSequence& sentence);
void WriteTokenized(std::ostream& out, const std::vector<TokenSequence>& sentences);

class TokenizedReader {
 public:
  explicit TokenizedReader(std::istream& in) : in_(in) {}
  // Throws Error(kInvalidEncoding) with the line number.
  std::optional<TokenSequence> Next();
  int line_number() const { return line_number_; }

 private:
  std::istream& in_;
  int line_number_ = 0;
};

std::vector<TokenSequence> ReadTokenized(std::istream& in);

}  // namespace hanpiece

#endif  // HANPIECE_CORPUS_H_
