#ifndef HANPIECE_DEMO_ANALYZER_H_
#define HANPIECE_DEMO_ANALYZER_H_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hanpiece/morph.h"

namespace hanpiece {

// Longest-match dictionary analyzer for tests and demos. It is not a real
// morphological analyzer: each eojeol is cut left to right into the longest
// dictionary surfaces; characters not covered by any entry are grouped by
// character class and tagged NNG (Hangul), SL, SN, SF or SY.
class DemoAnalyzer {
 public:
  // Built-in dictionary covering the bundled examples.
  static DemoAnalyzer Builtin();

  // Lines of `surface<TAB>form/TAG+form/TAG...`.
  static DemoAnalyzer FromStream(std::istream& in);

  void Add(std::string surface, std::vector<MorphemeSpec> analysis);

  AnalyzedSentence Analyze(std::string_view sentence,
                           const ClassificationTable& table) const;

 private:
  std::vector<MorphemeSpec> AnalyzeEojeol(std::u32string_view eojeol) const;

  std::map<std::u32string, std::vector<MorphemeSpec>> dict_;
  size_t max_len_ = 0;
};

}  // namespace hanpiece

#endif  // HANPIECE_DEMO_ANALYZER_H_
