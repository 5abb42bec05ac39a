#ifndef HANPIECE_MORPH_H_
#define HANPIECE_MORPH_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hanpiece {

enum class MorphemeType { kLexical, kGrammatical };

std::string_view MorphemeTypeName(MorphemeType type);

// Closed POS tag -> morpheme type table (Sejong / MeCab-ko tagset).
class ClassificationTable {
 public:
  // Particles, endings, copulas and derivational suffixes are grammatical;
  // everything else in the tagset is lexical.
  static ClassificationTable Default();

  // Reads `TAG=lexical|grammatical` lines on top of Default(). Blank lines
  // and lines starting with '#' are ignored.
  static ClassificationTable FromStream(std::istream& in);
  static ClassificationTable FromFile(const std::filesystem::path& path);

  // Throws Error(kUnknownTag).
  MorphemeType Classify(std::string_view tag) const;
  bool Contains(std::string_view tag) const;
  void Set(std::string tag, MorphemeType type);

  const std::map<std::string, MorphemeType, std::less<>>& entries() const {
    return table_;
  }

 private:
  std::map<std::string, MorphemeType, std::less<>> table_;
};

struct Morpheme {
  std::string canonical;  // dictionary form, e.g. 았
  std::string surface;    // realized fragment, e.g. a lone trail jamo
  std::string pos;
  MorphemeType type = MorphemeType::kLexical;

  friend bool operator==(const Morpheme&, const Morpheme&) = default;
};

struct AnalyzedEojeol {
  std::string surface;
  std::vector<Morpheme> morphemes;
  // Set when the surface could not be split; fragments then hold the
  // canonical forms.
  bool alignment_failed = false;

  friend bool operator==(const AnalyzedEojeol&, const AnalyzedEojeol&) = default;
};

using AnalyzedSentence = std::vector<AnalyzedEojeol>;

// (canonical form, POS tag) as reported by an analyzer.
struct MorphemeSpec {
  std::string canonical;
  std::string pos;
};

// Assigns each morpheme the part of the eojeol surface it realizes, splitting
// syllables at the jamo level where a morpheme boundary falls inside one.
// Never throws on mismatch: falls back to canonical fragments and sets
// alignment_failed. Throws Error(kUnknownTag) for tags outside the table.
AnalyzedEojeol AlignSurface(std::string_view eojeol_surface,
                            std::span<const MorphemeSpec> morphemes,
                            const ClassificationTable& table);

// Jamo-level core of AlignSurface. Inputs are conjoining-jamo strings; returns
// one fragment per canonical form, or nullopt when no alignment exists.
std::optional<std::vector<std::u32string>> AlignJamo(
    std::u32string_view surface, std::span<const std::u32string> canonicals);

// Streaming reader for analyzer output:
//
//   surface<TAB>POS[,features...]     one morpheme token per line
//   EOS or blank line                 sentence boundary
//   <SP>                              eojeol boundary
//
// A token also starts a new eojeol when its surface column has leading
// whitespace or when an optional third column carries whitespace (MeCab's
// %pS). If the 8th feature (expression) is present, e.g.
// 가/VV/*+았/EP/*, the token expands into those morphemes. A sentence
// without any boundary markers is a single eojeol.
class TaggedCorpusReader {
 public:
  TaggedCorpusReader(std::istream& in, const ClassificationTable& table);

  // Next non-empty sentence, or nullopt at end of input. Throws
  // Error(kMalformedLine) / Error(kUnknownTag) with the line number.
  std::optional<AnalyzedSentence> Next();

  int line_number() const { return line_number_; }

 private:
  std::istream& in_;
  const ClassificationTable& table_;
  int line_number_ = 0;
};

std::vector<AnalyzedSentence> ParseTaggedCorpus(std::istream& in,
                                                const ClassificationTable& table);

inline constexpr std::string_view kEojeolSeparatorLine = "<SP>";

// Writes a sentence in the reader's format: one line per eojeol with a
// compound tag and an expression field, <SP> between eojeols, then EOS.
void WriteTaggedSentence(std::ostream& out, const AnalyzedSentence& sentence);

// Eojeol surfaces joined by single spaces.
std::string SentenceSurface(const AnalyzedSentence& sentence);

}  // namespace hanpiece

#endif  // HANPIECE_MORPH_H_
