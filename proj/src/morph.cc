#include "hanpiece/morph.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "hanpiece/error.h"
#include "hanpiece/hangul.h"
#include "hanpiece/utf8.h"

namespace hanpiece {
namespace {

constexpr char32_t kSilentLead = 0x110B;  // ᄋ

struct Contraction {
  char32_t first;
  char32_t second;
  char32_t fused;
};

// 아+아→아, 어+어→어, 하+여→해, 이+어→여 at the vowel level.
constexpr std::array<Contraction, 4> kContractions = {{
    {0x1161, 0x1161, 0x1161},
    {0x1165, 0x1165, 0x1165},
    {0x1161, 0x1167, 0x1162},
    {0x1175, 0x1165, 0x1167},
}};

std::optional<char32_t> Contract(char32_t first, char32_t second) {
  for (const auto& c : kContractions) {
    if (c.first == first && c.second == second) return c.fused;
  }
  return std::nullopt;
}

// Canonical forms from analyzers spell sub-syllabic endings with
// compatibility jamo (ㄴ, ㅆ); bring them to conjoining form first.
std::u32string CanonicalJamo(std::string_view canonical) {
  return DecomposeText(FromDisplayJamo(DecodeUtf8OrThrow(canonical)));
}

bool StartsWithSilentLead(std::u32string_view jamo) {
  return jamo.size() >= 2 && jamo[0] == kSilentLead && IsVowelJamo(jamo[1]);
}

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool IsTagChar(char c) { return c >= 'A' && c <= 'Z'; }

[[noreturn]] void Malformed(int line, const std::string& why) {
  throw Error(ErrorKind::kMalformedLine,
              "line " + std::to_string(line) + ": " + why);
}

// Parses 가/VV/*+았/EP/* into (form, tag) pairs. Forms may themselves contain
// '/' or '+', so each item is located by its "/TAG/" anchor.
std::vector<MorphemeSpec> ParseExpression(std::string_view expr, int line) {
  std::vector<MorphemeSpec> out;
  size_t pos = 0;
  while (pos < expr.size()) {
    size_t anchor = std::string_view::npos;
    size_t tag_end = 0;
    for (size_t i = pos + 1; i < expr.size(); ++i) {
      if (expr[i] != '/') continue;
      size_t j = i + 1;
      while (j < expr.size() && IsTagChar(expr[j])) ++j;
      if (j > i + 1 && (j == expr.size() || expr[j] == '/' || expr[j] == '+')) {
        anchor = i;
        tag_end = j;
        break;
      }
    }
    if (anchor == std::string_view::npos) {
      Malformed(line, "bad expression field '" + std::string(expr) + "'");
    }
    MorphemeSpec spec{std::string(expr.substr(pos, anchor - pos)),
                      std::string(expr.substr(anchor + 1, tag_end - anchor - 1))};
    out.push_back(std::move(spec));
    size_t next = tag_end;
    if (next < expr.size() && expr[next] == '/') {
      next = expr.find('+', next);
      if (next == std::string_view::npos) next = expr.size();
    }
    if (next < expr.size()) ++next;  // skip '+'
    pos = next;
  }
  return out;
}

struct PendingEojeol {
  std::string surface;
  std::vector<MorphemeSpec> morphemes;
};

}  // namespace

std::string_view MorphemeTypeName(MorphemeType type) {
  return type == MorphemeType::kLexical ? "lexical" : "grammatical";
}

ClassificationTable ClassificationTable::Default() {
  ClassificationTable t;
  constexpr std::string_view kGrammatical[] = {
      "JKS", "JKC", "JKG", "JKO", "JKB", "JKV", "JKQ", "JX", "JC",
      "EP", "EF", "EC", "ETN", "ETM",
      "VCP", "VCN", "XSN", "XSV", "XSA"};
  constexpr std::string_view kLexical[] = {
      "NNG", "NNP", "NNB", "NNBC", "NR", "NP",
      "VV", "VA", "VX",
      "MM", "MAG", "MAJ", "IC", "XPN", "XR",
      "SF", "SE", "SS", "SSO", "SSC", "SC", "SP", "SO", "SW", "SY",
      "SL", "SH", "SN",
      "NF", "NV", "NA"};
  for (auto tag : kGrammatical) t.Set(std::string(tag), MorphemeType::kGrammatical);
  for (auto tag : kLexical) t.Set(std::string(tag), MorphemeType::kLexical);
  return t;
}

ClassificationTable ClassificationTable::FromStream(std::istream& in) {
  ClassificationTable t = Default();
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const size_t eq = s.find('=');
    if (eq == std::string_view::npos) Malformed(line, "expected TAG=type");
    const std::string_view tag = Trim(s.substr(0, eq));
    std::string value(Trim(s.substr(eq + 1)));
    std::transform(value.begin(), value.end(), value.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (tag.empty() || !std::all_of(tag.begin(), tag.end(), IsTagChar)) {
      Malformed(line, "bad tag '" + std::string(tag) + "'");
    }
    if (value == "lexical") {
      t.Set(std::string(tag), MorphemeType::kLexical);
    } else if (value == "grammatical") {
      t.Set(std::string(tag), MorphemeType::kGrammatical);
    } else {
      Malformed(line, "type must be lexical or grammatical, got '" + value + "'");
    }
  }
  return t;
}

ClassificationTable ClassificationTable::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return FromStream(in);
}

MorphemeType ClassificationTable::Classify(std::string_view tag) const {
  const auto it = table_.find(tag);
  if (it == table_.end()) {
    throw Error(ErrorKind::kUnknownTag, "'" + std::string(tag) + "'");
  }
  return it->second;
}

bool ClassificationTable::Contains(std::string_view tag) const {
  return table_.find(tag) != table_.end();
}

void ClassificationTable::Set(std::string tag, MorphemeType type) {
  table_[std::move(tag)] = type;
}

std::optional<std::vector<std::u32string>> AlignJamo(
    std::u32string_view surface, std::span<const std::u32string> canonicals) {
  std::vector<std::u32string> fragments;
  fragments.reserve(canonicals.size());
  size_t p = 0;
  for (size_t i = 0; i < canonicals.size(); ++i) {
    const std::u32string& c = canonicals[i];
    const size_t start = p;
    size_t k = 0;
    // The leading 아/어/여 of this morpheme may have been fused into the
    // previous morpheme's vowel (가+았 → 갔).
    if (i > 0 && StartsWithSilentLead(c) && !(p < surface.size() && surface[p] == c[0])) {
      const std::u32string& prev = canonicals[i - 1];
      if (!prev.empty() && IsVowelJamo(prev.back()) && p > 0 &&
          IsVowelJamo(surface[p - 1]) &&
          Contract(prev.back(), c[1]) == surface[p - 1]) {
        k = 2;
      }
    }
    while (k < c.size()) {
      if (p < surface.size() && surface[p] == c[k]) {
        ++p;
        ++k;
        continue;
      }
      // Our final vowel fuses with the next morpheme's initial vowel
      // (하+였 → 했): take the contracted surface vowel.
      const bool last = k + 1 == c.size();
      if (last && IsVowelJamo(c[k]) && p < surface.size() &&
          IsVowelJamo(surface[p]) && i + 1 < canonicals.size() &&
          StartsWithSilentLead(canonicals[i + 1]) &&
          Contract(c[k], canonicals[i + 1][1]) == surface[p]) {
        ++p;
        ++k;
        continue;
      }
      return std::nullopt;
    }
    if (p == start) return std::nullopt;
    fragments.emplace_back(surface.substr(start, p - start));
  }
  if (p != surface.size()) return std::nullopt;
  return fragments;
}

AnalyzedEojeol AlignSurface(std::string_view eojeol_surface,
                            std::span<const MorphemeSpec> morphemes,
                            const ClassificationTable& table) {
  AnalyzedEojeol out;
  out.surface = std::string(eojeol_surface);
  out.morphemes.reserve(morphemes.size());
  for (const auto& m : morphemes) {
    out.morphemes.push_back(
        Morpheme{m.canonical, m.canonical, m.pos, table.Classify(m.pos)});
  }
  if (morphemes.empty()) {
    out.alignment_failed = !eojeol_surface.empty();
    return out;
  }

  std::vector<std::u32string> canonicals;
  canonicals.reserve(morphemes.size());
  for (const auto& m : morphemes) canonicals.push_back(CanonicalJamo(m.canonical));
  const std::u32string surface = DecomposeText(DecodeUtf8OrThrow(eojeol_surface));

  auto fragments = AlignJamo(surface, canonicals);
  if (!fragments) {
    out.alignment_failed = true;
    return out;
  }
  for (size_t i = 0; i < fragments->size(); ++i) {
    out.morphemes[i].surface = EncodeUtf8(ComposeText((*fragments)[i]));
  }
  return out;
}

TaggedCorpusReader::TaggedCorpusReader(std::istream& in,
                                       const ClassificationTable& table)
    : in_(in), table_(table) {}

std::optional<AnalyzedSentence> TaggedCorpusReader::Next() {
  AnalyzedSentence sentence;
  PendingEojeol pending;
  bool boundary = false;

  const auto flush = [&]() {
    if (pending.morphemes.empty()) return;
    sentence.push_back(AlignSurface(pending.surface, pending.morphemes, table_));
    pending = PendingEojeol{};
  };

  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_number_;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!DecodeUtf8(raw)) {
      throw Error(ErrorKind::kInvalidEncoding,
                  "line " + std::to_string(line_number_));
    }
    const std::string_view line = raw;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed == "EOS") {
      flush();
      if (!sentence.empty()) return sentence;
      boundary = false;
      continue;
    }
    if (trimmed == kEojeolSeparatorLine) {
      boundary = true;
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      if (trimmed.front() == '#') continue;  // comment
      Malformed(line_number_, "missing TAB");
    }

    const auto columns = Split(line, '\t');
    std::string_view surface = columns[0];
    if (!surface.empty() && (surface.front() == ' ' || surface.front() == '\t')) {
      boundary = true;
    }
    surface = Trim(surface);
    if (columns.size() >= 3 && !columns[2].empty() &&
        columns[2].find_first_of(" \t") != std::string_view::npos) {
      boundary = true;
    }
    if (surface.empty()) Malformed(line_number_, "empty surface");

    const auto features = Split(columns[1], ',');
    const std::string_view pos = Trim(features[0]);
    if (pos.empty()) Malformed(line_number_, "empty POS field");

    std::vector<MorphemeSpec> specs;
    if (features.size() >= 8 && features[7] != "*" && !Trim(features[7]).empty()) {
      // Feature columns are comma separated, but the expression may contain
      // commas of its own (e.g. the form ","), so re-join the tail.
      const size_t expr_start =
          static_cast<size_t>(features[7].data() - columns[1].data());
      specs = ParseExpression(Trim(columns[1].substr(expr_start)), line_number_);
    } else {
      // A compound tag without an expression cannot be split; keep the head.
      const std::string_view head = pos.substr(0, pos.find('+'));
      specs.push_back(MorphemeSpec{std::string(surface), std::string(head)});
    }
    for (const auto& spec : specs) {
      if (!table_.Contains(spec.pos)) {
        throw Error(ErrorKind::kUnknownTag,
                    "line " + std::to_string(line_number_) + ": '" + spec.pos + "'");
      }
      if (spec.canonical.empty()) Malformed(line_number_, "empty morpheme form");
    }

    if (boundary) {
      flush();
      boundary = false;
    }
    pending.surface += surface;
    for (auto& spec : specs) pending.morphemes.push_back(std::move(spec));
  }
  flush();
  if (!sentence.empty()) return sentence;
  return std::nullopt;
}

std::vector<AnalyzedSentence> ParseTaggedCorpus(std::istream& in,
                                                const ClassificationTable& table) {
  TaggedCorpusReader reader(in, table);
  std::vector<AnalyzedSentence> out;
  while (auto sentence = reader.Next()) out.push_back(std::move(*sentence));
  return out;
}

void WriteTaggedSentence(std::ostream& out, const AnalyzedSentence& sentence) {
  for (size_t e = 0; e < sentence.size(); ++e) {
    const AnalyzedEojeol& eojeol = sentence[e];
    if (e > 0) out << kEojeolSeparatorLine << '\n';
    std::string tags;
    std::string expression;
    for (size_t i = 0; i < eojeol.morphemes.size(); ++i) {
      const Morpheme& m = eojeol.morphemes[i];
      if (i > 0) {
        tags += '+';
        expression += '+';
      }
      tags += m.pos;
      expression += m.canonical + "/" + m.pos + "/*";
    }
    out << eojeol.surface << '\t' << tags << ",*,*,*,*,*,*," << expression << '\n';
  }
  out << "EOS\n";
}

std::string SentenceSurface(const AnalyzedSentence& sentence) {
  std::string out;
  for (size_t i = 0; i < sentence.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentence[i].surface;
  }
  return out;
}

}  // namespace hanpiece
