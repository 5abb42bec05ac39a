// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.
#ifndef HANPIECE_TESTS_ORACLES_H_
#define HANPIECE_TESTS_ORACLES_H_

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hanpiece::oracle {

inline std::u32string ToU32(const icu::UnicodeString& s) {
  std::u32string out;
  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

inline icu::UnicodeString FromU32(const std::u32string& s) {
  icu::UnicodeString out;
  for (char32_t c : s) out.append(static_cast<UChar32>(c));
  return out;
}

// ICU canonical decomposition / composition.
inline std::u32string IcuNfd(const std::u32string& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD unavailable");
  icu::UnicodeString out = nfd->normalize(FromU32(s), status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD failed");
  return ToU32(out);
}

inline std::u32string IcuNfc(const std::u32string& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString out = nfc->normalize(FromU32(s), status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC failed");
  return ToU32(out);
}

inline std::string IcuNfdUtf8(const std::string& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  icu::UnicodeString out = nfd->normalize(icu::UnicodeString::fromUTF8(s), status);
  std::string utf8;
  out.toUTF8String(utf8);
  return utf8;
}

inline std::string IcuNfcUtf8(const std::string& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString out = nfc->normalize(icu::UnicodeString::fromUTF8(s), status);
  std::string utf8;
  out.toUTF8String(utf8);
  return utf8;
}

// Splits UTF-8 into one string per scalar using ICU.
inline std::vector<std::string> Scalars(const std::string& s) {
  std::vector<std::string> out;
  const icu::UnicodeString u = icu::UnicodeString::fromUTF8(s);
  for (int32_t i = 0; i < u.length();) {
    const UChar32 c = u.char32At(i);
    std::string piece;
    icu::UnicodeString(c).toUTF8String(piece);
    out.push_back(piece);
    i += U16_LENGTH(c);
  }
  return out;
}

struct OracleMerge {
  std::string left;
  std::string right;
  std::string merged;
  uint64_t freq;
};

struct OracleTrainResult {
  std::vector<std::string> vocab;
  std::vector<OracleMerge> merges;
};

// Step-by-step WordPiece merge simulator. Every iteration recounts all
// symbols and pairs from scratch, ranks every candidate with a full sort and
// rewrites every word. Words are keyed by (text, continuation flag).
inline OracleTrainResult SimulateWordPiece(
    const std::map<std::pair<std::string, bool>, uint64_t>& words, size_t vocab_size,
    uint64_t min_frequency, size_t max_token_length = 100) {
  const std::vector<std::string> specials = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};
  std::vector<std::pair<std::vector<std::string>, uint64_t>> segs;
  std::set<std::string> alphabet;
  for (const auto& [key, count] : words) {
    std::vector<std::string> symbols;
    const auto scalars = Scalars(key.first);
    for (size_t i = 0; i < scalars.size(); ++i) {
      symbols.push_back((i > 0 || key.second) ? "##" + scalars[i] : scalars[i]);
      alphabet.insert(symbols.back());
    }
    segs.emplace_back(symbols, count);
  }

  OracleTrainResult result;
  result.vocab = specials;
  for (const auto& a : alphabet) result.vocab.push_back(a);
  if (result.vocab.size() > vocab_size) {
    throw std::runtime_error("oracle does not model alphabet truncation");
  }

  const auto piece_length = [](const std::string& s) {
    return Scalars(s.rfind("##", 0) == 0 ? s.substr(2) : s).size();
  };

  while (result.vocab.size() < vocab_size) {
    std::map<std::string, uint64_t> symbol_freq;
    std::map<std::pair<std::string, std::string>, uint64_t> pair_freq;
    for (const auto& [symbols, count] : segs) {
      for (size_t i = 0; i < symbols.size(); ++i) {
        symbol_freq[symbols[i]] += count;
        if (i + 1 < symbols.size()) pair_freq[{symbols[i], symbols[i + 1]}] += count;
      }
    }
    struct Candidate {
      std::string left, right, merged;
      uint64_t freq;
      unsigned __int128 denominator;
    };
    std::vector<Candidate> candidates;
    for (const auto& [pair, freq] : pair_freq) {
      if (freq < min_frequency) continue;
      if (piece_length(pair.first) + piece_length(pair.second) > max_token_length) continue;
      candidates.push_back(Candidate{
          pair.first, pair.second, pair.first + pair.second.substr(2), freq,
          static_cast<unsigned __int128>(symbol_freq[pair.first]) * symbol_freq[pair.second]});
    }
    if (candidates.empty()) break;
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
      const unsigned __int128 lhs = static_cast<unsigned __int128>(x.freq) * y.denominator;
      const unsigned __int128 rhs = static_cast<unsigned __int128>(y.freq) * x.denominator;
      if (lhs != rhs) return lhs > rhs;
      if (x.freq != y.freq) return x.freq > y.freq;
      if (x.merged != y.merged) return x.merged < y.merged;
      return x.left < y.left;
    });
    const Candidate best = candidates.front();
    for (auto& [symbols, count] : segs) {
      std::vector<std::string> next;
      for (size_t i = 0; i < symbols.size(); ++i) {
        if (i + 1 < symbols.size() && symbols[i] == best.left && symbols[i + 1] == best.right) {
          next.push_back(best.merged);
          ++i;
        } else {
          next.push_back(symbols[i]);
        }
      }
      symbols = std::move(next);
    }
    result.merges.push_back(OracleMerge{best.left, best.right, best.merged, best.freq});
    if (std::find(result.vocab.begin(), result.vocab.end(), best.merged) == result.vocab.end()) {
      result.vocab.push_back(best.merged);
    }
  }
  return result;
}

struct OracleMetrics {
  double oov_rate;
  double wsr;
  double mean;
  double stddev;
};

// Plain recount over a flattened token list plus a two-pass per-sentence
// mean and population standard deviation in long double.
inline OracleMetrics RecountMetrics(const std::vector<std::vector<std::string>>& corpus) {
  std::vector<std::string> flat;
  for (const auto& s : corpus) flat.insert(flat.end(), s.begin(), s.end());
  const auto unk = std::count(flat.begin(), flat.end(), std::string("[UNK]"));
  const auto sub = std::count_if(flat.begin(), flat.end(), [](const std::string& t) {
    return t.size() >= 2 && t[0] == '#' && t[1] == '#';
  });
  std::vector<long double> rates;
  for (const auto& s : corpus) {
    if (s.empty()) continue;
    long double n = 0;
    for (const auto& t : s) n += (t.rfind("##", 0) == 0) ? 1 : 0;
    rates.push_back(100.0L * n / static_cast<long double>(s.size()));
  }
  long double mean = 0;
  for (auto r : rates) mean += r;
  mean /= rates.size();
  long double var = 0;
  for (auto r : rates) var += (r - mean) * (r - mean);
  var /= rates.size();
  return OracleMetrics{100.0 * static_cast<double>(unk) / static_cast<double>(flat.size()),
                       100.0 * static_cast<double>(sub) / static_cast<double>(flat.size()),
                       static_cast<double>(mean), static_cast<double>(std::sqrt(var))};
}

inline double WserRecount(const std::vector<std::string>& entries) {
  size_t pieces = 0;
  size_t regular = 0;
  for (const auto& e : entries) {
    if (e == "[PAD]" || e == "[UNK]" || e == "[CLS]" || e == "[SEP]" || e == "[MASK]") continue;
    ++regular;
    if (e.rfind("##", 0) == 0) ++pieces;
  }
  return regular == 0 ? 0.0 : 100.0 * static_cast<double>(pieces) / static_cast<double>(regular);
}

inline bool RelClose(double a, double b, double rel = 1e-9) {
  if (a == b) return true;
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace hanpiece::oracle

#endif  // HANPIECE_TESTS_ORACLES_H_
