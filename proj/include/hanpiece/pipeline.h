#ifndef HANPIECE_PIPELINE_H_
#define HANPIECE_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanpiece/morph.h"

namespace hanpiece {

// WP:        eojeols as they are
// WP_SD:     eojeols, fully jamo-decomposed
// MorWP:     morpheme fragments
// MorWP_SD:  morpheme fragments, fully jamo-decomposed
// MorWP_MD:  morpheme fragments, only lexical ones jamo-decomposed
enum class PipelineMode { kWp, kWpSd, kMorWp, kMorWpSd, kMorWpMd };

inline constexpr PipelineMode kAllModes[] = {
    PipelineMode::kWp, PipelineMode::kWpSd, PipelineMode::kMorWp,
    PipelineMode::kMorWpSd, PipelineMode::kMorWpMd};

// wp, wp-sd, morwp, morwp-sd, morwp-md
std::string_view ModeName(PipelineMode mode);
std::optional<PipelineMode> ParseMode(std::string_view name);

constexpr bool IsMorphemeMode(PipelineMode mode) {
  return mode == PipelineMode::kMorWp || mode == PipelineMode::kMorWpSd ||
         mode == PipelineMode::kMorWpMd;
}

constexpr bool IsDecomposingMode(PipelineMode mode) {
  return mode != PipelineMode::kWp && mode != PipelineMode::kMorWp;
}

struct PreToken {
  std::string text;
  // Piece of a larger token; the WordPiece encoder prefixes its first piece
  // with ## as well.
  bool continuation = false;

  friend bool operator==(const PreToken&, const PreToken&) = default;
};

// WP modes only; Mor* modes raise Error(kModeInputMismatch).
std::vector<PreToken> Pretokenize(std::string_view raw_sentence, PipelineMode mode);

// Mor* modes only; WP modes raise Error(kModeInputMismatch).
std::vector<PreToken> Pretokenize(const AnalyzedSentence& sentence, PipelineMode mode);

// Whitespace split on ASCII whitespace.
std::vector<std::string> SplitEojeols(std::string_view sentence);

}  // namespace hanpiece

#endif  // HANPIECE_PIPELINE_H_
