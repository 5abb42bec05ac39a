#include "hanpiece/pipeline.h"

#include "hanpiece/error.h"
#include "hanpiece/hangul.h"

namespace hanpiece {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

std::string_view ModeName(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::kWp: return "wp";
    case PipelineMode::kWpSd: return "wp-sd";
    case PipelineMode::kMorWp: return "morwp";
    case PipelineMode::kMorWpSd: return "morwp-sd";
    case PipelineMode::kMorWpMd: return "morwp-md";
  }
  return "wp";
}

std::optional<PipelineMode> ParseMode(std::string_view name) {
  for (PipelineMode mode : kAllModes) {
    if (ModeName(mode) == name) return mode;
  }
  return std::nullopt;
}

std::vector<std::string> SplitEojeols(std::string_view sentence) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < sentence.size()) {
    while (pos < sentence.size() && IsAsciiSpace(sentence[pos])) ++pos;
    size_t end = pos;
    while (end < sentence.size() && !IsAsciiSpace(sentence[end])) ++end;
    if (end > pos) out.emplace_back(sentence.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::vector<PreToken> Pretokenize(std::string_view raw_sentence, PipelineMode mode) {
  if (IsMorphemeMode(mode)) {
    throw Error(ErrorKind::kModeInputMismatch,
                std::string(ModeName(mode)) + " needs an analyzed sentence");
  }
  std::vector<PreToken> out;
  for (auto& eojeol : SplitEojeols(raw_sentence)) {
    if (mode == PipelineMode::kWpSd) {
      out.push_back(PreToken{DecomposeText(std::string_view(eojeol)), false});
    } else {
      out.push_back(PreToken{std::move(eojeol), false});
    }
  }
  return out;
}

std::vector<PreToken> Pretokenize(const AnalyzedSentence& sentence, PipelineMode mode) {
  if (!IsMorphemeMode(mode)) {
    throw Error(ErrorKind::kModeInputMismatch,
                std::string(ModeName(mode)) + " needs raw text");
  }
  std::vector<PreToken> out;
  for (const AnalyzedEojeol& eojeol : sentence) {
    for (const Morpheme& m : eojeol.morphemes) {
      const bool decompose =
          mode == PipelineMode::kMorWpSd ||
          (mode == PipelineMode::kMorWpMd && m.type == MorphemeType::kLexical);
      if (m.surface.empty()) continue;
      out.push_back(PreToken{decompose ? DecomposeText(std::string_view(m.surface))
                                       : m.surface,
                             false});
    }
  }
  return out;
}

}  // namespace hanpiece
