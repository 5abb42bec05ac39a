#ifndef HANPIECE_TESTS_TEST_UTIL_H_
#define HANPIECE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hanpiece/hangul.h"
#include "hanpiece/morph.h"
#include "hanpiece/pipeline.h"

namespace hanpiece::testing {

inline std::filesystem::path DataPath(const std::string& relative) {
  return std::filesystem::path(HANPIECE_DATA_DIR) / relative;
}

inline std::vector<AnalyzedSentence> LoadFixture(const std::string& name) {
  std::ifstream in(DataPath("fixtures/" + name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return ParseTaggedCorpus(in, ClassificationTable::Default());
}

// Pre-tokens in compatibility-jamo display, space separated.
inline std::string DisplayRow(const std::vector<PreToken>& tokens) {
  std::string row;
  for (const auto& t : tokens) {
    if (!row.empty()) row += ' ';
    row += ToDisplayJamo(std::string_view(t.text));
  }
  return row;
}

inline std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hanpiece::testing

#endif  // HANPIECE_TESTS_TEST_UTIL_H_
