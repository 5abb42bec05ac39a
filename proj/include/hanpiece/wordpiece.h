#ifndef HANPIECE_WORDPIECE_H_
#define HANPIECE_WORDPIECE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hanpiece/pipeline.h"

namespace hanpiece {

inline constexpr std::string_view kContinuationPrefix = "##";
inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kUnkToken = "[UNK]";
inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";
inline constexpr std::string_view kMaskToken = "[MASK]";
inline constexpr std::array<std::string_view, 5> kSpecialTokens = {
    kPadToken, kUnkToken, kClsToken, kSepToken, kMaskToken};

inline bool IsContinuation(std::string_view token) {
  return token.starts_with(kContinuationPrefix);
}

using TokenSequence = std::vector<std::string>;

// Ordered token list; a token's id is its position. The five special tokens
// always occupy ids 0..4.
class Vocabulary {
 public:
  Vocabulary();

  // Throws Error(kMissingSpecials) / Error(kDuplicateEntry).
  explicit Vocabulary(std::vector<std::string> entries);

  // Returns false if already present.
  bool Add(std::string token);

  bool Contains(std::string_view token) const { return Id(token).has_value(); }
  std::optional<int> Id(std::string_view token) const;
  const std::string& Token(int id) const { return entries_.at(id); }

  size_t size() const { return entries_.size(); }
  const std::vector<std::string>& entries() const { return entries_; }
  // Longest entry in scalars, not counting the ## prefix.
  size_t max_piece_length() const { return max_piece_length_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.entries_ == b.entries_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> entries_;
  std::unordered_map<std::string, int, Hash, std::equal_to<>> ids_;
  size_t max_piece_length_ = 0;
};

// vocab.txt: one token per line, id = zero-based line number.
void WriteVocab(std::ostream& out, const Vocabulary& vocab);
Vocabulary ReadVocab(std::istream& in);
void SaveVocab(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary LoadVocab(const std::filesystem::path& path);

struct TrainConfig {
  size_t vocab_size = 32000;
  uint64_t min_frequency = 2;
  // Upper bound on merged token length in scalars (## excluded).
  size_t max_token_length = 100;
};

struct Merge {
  std::string left;
  std::string right;
  std::string merged;
  uint64_t pair_frequency = 0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

struct TrainResult {
  Vocabulary vocab;
  std::vector<Merge> merges;
  size_t alphabet_size = 0;
};

// WordPiece trainer. Pre-tokens are counted as they are fed; Train() then
// starts from the character alphabet (word-internal characters as ##c) and
// repeatedly merges the adjacent pair maximizing
//
//   freq(ab) / (freq(a) * freq(b))
//
// over pairs with freq(ab) >= min_frequency. Ties go to the higher freq(ab),
// then to the lexicographically smaller merged string, then to the smaller
// left symbol. Training stops at vocab_size or when no pair qualifies.
class WordPieceTrainer {
 public:
  explicit WordPieceTrainer(TrainConfig config) : config_(config) {}

  void Feed(const PreToken& token, uint64_t count = 1);
  void Feed(std::span<const PreToken> tokens);

  // Throws Error(kEmptyCorpus) when nothing was fed.
  TrainResult Train() const;

  // Distinct pre-tokens with their counts; the bool is the continuation flag.
  const std::map<std::pair<std::string, bool>, uint64_t>& word_counts() const {
    return word_counts_;
  }

 private:
  TrainConfig config_;
  std::map<std::pair<std::string, bool>, uint64_t> word_counts_;
};

// One row of the training report TSV.
void WriteTrainReport(std::ostream& out, const TrainResult& result);

inline constexpr size_t kDefaultMaxInputChars = 100;

// Greedy longest-match-first. A pre-token that cannot be fully covered, or
// that is longer than max_input_chars scalars, becomes a single [UNK].
void EncodePreToken(const PreToken& token, const Vocabulary& vocab,
                    TokenSequence* out,
                    size_t max_input_chars = kDefaultMaxInputChars);
TokenSequence Encode(std::span<const PreToken> tokens, const Vocabulary& vocab,
                     size_t max_input_chars = kDefaultMaxInputChars);

// Joins ## pieces onto the preceding token, recomposes jamo into syllables
// and separates units with single spaces. For Mor* modes the units are
// morphemes, so the original spacing is not recovered. Throws
// Error(kDanglingContinuation) when the sequence starts with a ## piece.
std::string Decode(std::span<const std::string> tokens, PipelineMode mode);

}  // namespace hanpiece

#endif  // HANPIECE_WORDPIECE_H_
