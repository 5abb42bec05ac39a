#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "hanpiece/error.h"
#include "hanpiece/utf8.h"
#include "hanpiece/wordpiece.h"

namespace hanpiece {
namespace {

using PairKey = uint64_t;

PairKey MakeKey(uint32_t a, uint32_t b) { return (static_cast<uint64_t>(a) << 32) | b; }
uint32_t KeyLeft(PairKey k) { return static_cast<uint32_t>(k >> 32); }
uint32_t KeyRight(PairKey k) { return static_cast<uint32_t>(k & 0xFFFFFFFFu); }

struct Word {
  std::vector<uint32_t> symbols;
  uint64_t count;
};

// Mutable training state: the current segmentation of every distinct word
// plus symbol and adjacent-pair frequencies kept in sync with it.
class MergeState {
 public:
  uint32_t Intern(const std::string& symbol) {
    auto [it, inserted] = ids_.try_emplace(symbol, static_cast<uint32_t>(strings_.size()));
    if (inserted) {
      strings_.push_back(symbol);
      std::string_view piece = symbol;
      if (IsContinuation(piece)) piece.remove_prefix(kContinuationPrefix.size());
      lengths_.push_back(Utf8Length(piece));
      symbol_freq_.push_back(0);
    }
    return it->second;
  }

  void AddWord(std::vector<uint32_t> symbols, uint64_t count) {
    words_.push_back(Word{std::move(symbols), count});
    Account(static_cast<uint32_t>(words_.size() - 1), +1);
  }

  const std::string& str(uint32_t id) const { return strings_[id]; }
  uint64_t symbol_freq(uint32_t id) const { return symbol_freq_[id]; }
  size_t symbol_count() const { return strings_.size(); }

  std::optional<PairKey> BestPair(uint64_t min_frequency, size_t max_length) const {
    std::optional<PairKey> best;
    uint64_t best_freq = 0;
    unsigned __int128 best_denominator = 1;
    std::string best_merged;
    for (const auto& [key, freq] : pair_freq_) {
      if (freq == 0 || freq < min_frequency) continue;
      const uint32_t a = KeyLeft(key);
      const uint32_t b = KeyRight(key);
      if (lengths_[a] + lengths_[b] > max_length) continue;
      const unsigned __int128 denominator =
          static_cast<unsigned __int128>(symbol_freq_[a]) * symbol_freq_[b];
      if (!best) {
        best = key;
        best_freq = freq;
        best_denominator = denominator;
        best_merged = MergedString(a, b);
        continue;
      }
      // freq / denominator vs best_freq / best_denominator, exactly.
      const unsigned __int128 lhs = static_cast<unsigned __int128>(freq) * best_denominator;
      const unsigned __int128 rhs = static_cast<unsigned __int128>(best_freq) * denominator;
      bool better = lhs > rhs;
      if (lhs == rhs) {
        if (freq != best_freq) {
          better = freq > best_freq;
        } else {
          std::string merged = MergedString(a, b);
          if (merged != best_merged) {
            better = merged < best_merged;
          } else {
            better = strings_[a] < strings_[KeyLeft(*best)];
          }
        }
      }
      if (better) {
        best = key;
        best_freq = freq;
        best_denominator = denominator;
        best_merged = MergedString(a, b);
      }
    }
    return best;
  }

  uint64_t pair_freq(PairKey key) const {
    const auto it = pair_freq_.find(key);
    return it == pair_freq_.end() ? 0 : it->second;
  }

  std::string MergedString(uint32_t a, uint32_t b) const {
    return strings_[a] + strings_[b].substr(kContinuationPrefix.size());
  }

  // Rewrites every word containing (a, b) with the merged symbol.
  uint32_t ApplyMerge(PairKey key) {
    const uint32_t a = KeyLeft(key);
    const uint32_t b = KeyRight(key);
    const uint32_t merged = Intern(MergedString(a, b));
    std::vector<uint32_t> candidates = std::move(pair_words_[key]);
    pair_words_.erase(key);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (uint32_t w : candidates) {
      Word& word = words_[w];
      bool present = false;
      for (size_t i = 0; i + 1 < word.symbols.size(); ++i) {
        if (word.symbols[i] == a && word.symbols[i + 1] == b) {
          present = true;
          break;
        }
      }
      if (!present) continue;
      Account(w, -1);
      std::vector<uint32_t> rewritten;
      rewritten.reserve(word.symbols.size());
      for (size_t i = 0; i < word.symbols.size(); ++i) {
        if (i + 1 < word.symbols.size() && word.symbols[i] == a && word.symbols[i + 1] == b) {
          rewritten.push_back(merged);
          ++i;
        } else {
          rewritten.push_back(word.symbols[i]);
        }
      }
      word.symbols = std::move(rewritten);
      Account(w, +1);
    }
    return merged;
  }

 private:
  void Account(uint32_t w, int sign) {
    const Word& word = words_[w];
    for (size_t i = 0; i < word.symbols.size(); ++i) {
      if (sign > 0) {
        symbol_freq_[word.symbols[i]] += word.count;
      } else {
        symbol_freq_[word.symbols[i]] -= word.count;
      }
      if (i + 1 == word.symbols.size()) continue;
      const PairKey key = MakeKey(word.symbols[i], word.symbols[i + 1]);
      if (sign > 0) {
        pair_freq_[key] += word.count;
        pair_words_[key].push_back(w);
      } else {
        auto it = pair_freq_.find(key);
        it->second -= word.count;
        if (it->second == 0) pair_freq_.erase(it);
      }
    }
  }

  std::vector<std::string> strings_;
  std::vector<size_t> lengths_;
  std::vector<uint64_t> symbol_freq_;
  std::unordered_map<std::string, uint32_t> ids_;
  std::vector<Word> words_;
  std::unordered_map<PairKey, uint64_t> pair_freq_;
  // Words that contained the pair at some point; may hold stale entries.
  std::unordered_map<PairKey, std::vector<uint32_t>> pair_words_;
};

}  // namespace

void WordPieceTrainer::Feed(const PreToken& token, uint64_t count) {
  if (token.text.empty() || count == 0) return;
  word_counts_[{token.text, token.continuation}] += count;
}

void WordPieceTrainer::Feed(std::span<const PreToken> tokens) {
  for (const auto& token : tokens) Feed(token);
}

TrainResult WordPieceTrainer::Train() const {
  if (word_counts_.empty()) throw Error(ErrorKind::kEmptyCorpus, "no pre-tokens to train on");

  MergeState state;
  std::string symbol;
  for (const auto& [key, count] : word_counts_) {
    const auto& [text, continuation] = key;
    const std::u32string chars = DecodeUtf8OrThrow(text);
    std::vector<uint32_t> symbols;
    symbols.reserve(chars.size());
    for (size_t i = 0; i < chars.size(); ++i) {
      symbol.clear();
      if (i > 0 || continuation) symbol = kContinuationPrefix;
      AppendUtf8(chars[i], &symbol);
      symbols.push_back(state.Intern(symbol));
    }
    state.AddWord(std::move(symbols), count);
  }

  TrainResult result;
  Vocabulary& vocab = result.vocab;

  std::vector<uint32_t> alphabet(state.symbol_count());
  for (uint32_t i = 0; i < alphabet.size(); ++i) alphabet[i] = i;
  const size_t room =
      config_.vocab_size > vocab.size() ? config_.vocab_size - vocab.size() : 0;
  if (alphabet.size() > room) {
    // Keep the most frequent characters when the alphabet alone overflows.
    std::sort(alphabet.begin(), alphabet.end(), [&](uint32_t x, uint32_t y) {
      if (state.symbol_freq(x) != state.symbol_freq(y)) {
        return state.symbol_freq(x) > state.symbol_freq(y);
      }
      return state.str(x) < state.str(y);
    });
    alphabet.resize(room);
  }
  std::sort(alphabet.begin(), alphabet.end(),
            [&](uint32_t x, uint32_t y) { return state.str(x) < state.str(y); });
  for (uint32_t id : alphabet) vocab.Add(state.str(id));
  result.alphabet_size = alphabet.size();

  while (vocab.size() < config_.vocab_size) {
    const auto best = state.BestPair(config_.min_frequency, config_.max_token_length);
    if (!best) break;
    Merge merge{state.str(KeyLeft(*best)), state.str(KeyRight(*best)), "",
                state.pair_freq(*best)};
    const uint32_t merged = state.ApplyMerge(*best);
    merge.merged = state.str(merged);
    vocab.Add(merge.merged);
    result.merges.push_back(std::move(merge));
  }
  return result;
}

void WriteTrainReport(std::ostream& out, const TrainResult& result) {
  out << "merges\tfinal_size\talphabet_size\n"
      << result.merges.size() << '\t' << result.vocab.size() << '\t'
      << result.alphabet_size << '\n';
}

}  // namespace hanpiece
