#include "hanpiece/corpus.h"

#include <istream>
#include <ostream>

#include "hanpiece/error.h"
#include "hanpiece/parallel.h"
#include "hanpiece/utf8.h"

namespace hanpiece {
namespace {

constexpr size_t kBatchLines = 8192;

bool IsWhitespace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

std::optional<std::string> CleanLine(std::string_view line, const CleanConfig& config) {
  const std::u32string text = DecodeUtf8OrThrow(line);
  std::string out;
  out.reserve(line.size());
  int eojeols = 0;
  bool pending_space = false;
  for (char32_t c : text) {
    const bool always_kept = c == ' ' || c == '\t' || c == '\n';
    if (!always_kept && !config.allowed.contains(ClassifyChar(c))) continue;
    if (IsWhitespace(c)) {
      pending_space = true;
      continue;
    }
    if (out.empty()) {
      ++eojeols;
    } else if (pending_space) {
      out.push_back(' ');
      ++eojeols;
    }
    pending_space = false;
    AppendUtf8(c, &out);
  }
  if (eojeols < config.min_eojeols) return std::nullopt;
  return out;
}

CleanStats CleanCorpus(std::istream& in, std::ostream& out, const CleanConfig& config,
                       int jobs) {
  struct Result {
    std::optional<std::string> text;
    bool invalid = false;
  };
  const auto clean = [&config](const std::string& line) {
    Result r;
    try {
      r.text = CleanLine(line, config);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInvalidEncoding) throw;
      r.invalid = true;
    }
    return r;
  };

  CleanStats stats;
  std::vector<std::string> batch;
  batch.reserve(kBatchLines);
  const auto drain = [&]() {
    for (const Result& r : ParallelMap(batch, clean, jobs)) {
      if (r.invalid) {
        ++stats.invalid_encoding;
      } else if (!r.text) {
        ++stats.dropped_short;
      } else {
        out << *r.text << '\n';
        ++stats.lines_written;
      }
    }
    batch.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++stats.lines_read;
    batch.push_back(std::move(line));
    if (batch.size() == kBatchLines) drain();
  }
  drain();
  return stats;
}

void WriteTokenizedLine(std::ostream& out, const TokenSequence& sentence) {
  for (size_t i = 0; i < sentence.size(); ++i) {
    if (i > 0) out << ' ';
    out << sentence[i];
  }
  out << '\n';
}

void WriteTokenized(std::ostream& out, const std::vector<TokenSequence>& sentences) {
  for (const auto& s : sentences) WriteTokenizedLine(out, s);
}

std::optional<TokenSequence> TokenizedReader::Next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  ++line_number_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!DecodeUtf8(line)) {
    throw Error(ErrorKind::kInvalidEncoding, "line " + std::to_string(line_number_));
  }
  TokenSequence tokens;
  size_t start = 0;
  while (start < line.size()) {
    size_t end = line.find(' ', start);
    if (end == std::string::npos) end = line.size();
    if (end > start) tokens.push_back(line.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

std::vector<TokenSequence> ReadTokenized(std::istream& in) {
  TokenizedReader reader(in);
  std::vector<TokenSequence> out;
  while (auto s = reader.Next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace hanpiece
