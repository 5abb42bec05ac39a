#include <fstream>
#include <istream>
#include <ostream>

#include "hanpiece/error.h"
#include "hanpiece/hangul.h"
#include "hanpiece/utf8.h"
#include "hanpiece/wordpiece.h"

namespace hanpiece {

Vocabulary::Vocabulary() {
  for (auto special : kSpecialTokens) Add(std::string(special));
}

Vocabulary::Vocabulary(std::vector<std::string> entries) {
  if (entries.size() < kSpecialTokens.size()) {
    throw Error(ErrorKind::kMissingSpecials, "fewer entries than special tokens");
  }
  for (size_t i = 0; i < kSpecialTokens.size(); ++i) {
    if (entries[i] != kSpecialTokens[i]) {
      throw Error(ErrorKind::kMissingSpecials,
                  "entry " + std::to_string(i) + " is '" + entries[i] +
                      "', expected '" + std::string(kSpecialTokens[i]) + "'");
    }
  }
  for (auto& token : entries) {
    const std::string copy = token;
    if (!Add(std::move(token))) {
      throw Error(ErrorKind::kDuplicateEntry, "'" + copy + "'");
    }
  }
}

bool Vocabulary::Add(std::string token) {
  if (ids_.find(std::string_view(token)) != ids_.end()) return false;
  std::string_view piece = token;
  if (IsContinuation(piece)) piece.remove_prefix(kContinuationPrefix.size());
  max_piece_length_ = std::max(max_piece_length_, Utf8Length(piece));
  ids_.emplace(token, static_cast<int>(entries_.size()));
  entries_.push_back(std::move(token));
  return true;
}

std::optional<int> Vocabulary::Id(std::string_view token) const {
  const auto it = ids_.find(token);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void WriteVocab(std::ostream& out, const Vocabulary& vocab) {
  for (const auto& token : vocab.entries()) out << token << '\n';
}

Vocabulary ReadVocab(std::istream& in) {
  std::vector<std::string> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      throw Error(ErrorKind::kMalformedLine,
                  "line " + std::to_string(number) + ": empty vocabulary entry");
    }
    if (!DecodeUtf8(line)) {
      throw Error(ErrorKind::kInvalidEncoding, "line " + std::to_string(number));
    }
    entries.push_back(std::move(line));
  }
  return Vocabulary(std::move(entries));
}

void SaveVocab(const Vocabulary& vocab, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  WriteVocab(out, vocab);
}

Vocabulary LoadVocab(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return ReadVocab(in);
}

void EncodePreToken(const PreToken& token, const Vocabulary& vocab,
                    TokenSequence* out, size_t max_input_chars) {
  const std::u32string text = DecodeUtf8OrThrow(token.text);
  if (text.empty()) return;
  if (text.size() > max_input_chars) {
    out->emplace_back(kUnkToken);
    return;
  }
  const size_t mark = out->size();
  size_t start = 0;
  std::string candidate;
  while (start < text.size()) {
    const bool prefixed = start > 0 || token.continuation;
    size_t end = std::min(text.size(), start + vocab.max_piece_length());
    bool found = false;
    for (; end > start; --end) {
      candidate.clear();
      if (prefixed) candidate = kContinuationPrefix;
      for (size_t i = start; i < end; ++i) AppendUtf8(text[i], &candidate);
      if (vocab.Contains(candidate)) {
        found = true;
        break;
      }
    }
    if (!found) {
      out->resize(mark);
      out->emplace_back(kUnkToken);
      return;
    }
    out->push_back(candidate);
    start = end;
  }
}

TokenSequence Encode(std::span<const PreToken> tokens, const Vocabulary& vocab,
                     size_t max_input_chars) {
  TokenSequence out;
  out.reserve(tokens.size() * 2);
  for (const auto& token : tokens) EncodePreToken(token, vocab, &out, max_input_chars);
  return out;
}

std::string Decode(std::span<const std::string> tokens, PipelineMode mode) {
  if (!tokens.empty() && IsContinuation(tokens.front())) {
    throw Error(ErrorKind::kDanglingContinuation,
                "sequence starts with '" + tokens.front() + "'");
  }
  std::vector<std::string> units;
  for (const auto& token : tokens) {
    if (IsContinuation(token)) {
      units.back() += std::string_view(token).substr(kContinuationPrefix.size());
    } else {
      units.push_back(token);
    }
  }
  std::string out;
  for (size_t i = 0; i < units.size(); ++i) {
    if (i > 0) out += ' ';
    out += IsDecomposingMode(mode) ? ComposeText(std::string_view(units[i])) : units[i];
  }
  return out;
}

}  // namespace hanpiece
