#include "hanpiece/demo_analyzer.h"

#include <algorithm>
#include <istream>
#include <sstream>

#include "hanpiece/error.h"
#include "hanpiece/hangul.h"
#include "hanpiece/utf8.h"

namespace hanpiece {
namespace {

constexpr std::string_view kBuiltinDictionary = R"(나라면	나/NP+이/VCP+라면/EC
나	나/NP
너	너/NP
그	그/NP
우리	우리/NP
집	집/NNG
학교	학교/NNG
사람	사람/NNG
해물	해물/NNG
라면	라면/NNG
밥	밥/NNG
책	책/NNG
친구	친구/NNG
우크라이나	우크라이나/NNP
서울	서울/NNP
는	는/JX
은	은/JX
도	도/JX
을	을/JKO
를	를/JKO
에	에/JKB
에서	에서/JKB
의	의/JKG
와	와/JC
과	과/JC
이	이/VCP
먹	먹/VV
읽	읽/VV
갔	가/VV+았/EP
샀	사/VV+았/EP
했	하/VV+였/EP
었	었/EP
았	았/EP
다	다/EF
고	고/EC
을걸	을걸/EF
.	./SF
)";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<MorphemeSpec> ParseAnalysis(std::string_view text, int line) {
  std::vector<MorphemeSpec> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    const size_t slash = item.rfind('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == item.size()) {
      throw Error(ErrorKind::kMalformedLine,
                  "line " + std::to_string(line) + ": expected form/TAG");
    }
    out.push_back(MorphemeSpec{std::string(item.substr(0, slash)),
                               std::string(item.substr(slash + 1))});
    start = end + 1;
  }
  return out;
}

bool IsSpace(char32_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view UnknownTag(char32_t c) {
  const CharClass cls = ClassifyChar(c);
  if (cls == CharClass::kHangulSyllable || cls == CharClass::kHangulJamo) return "NNG";
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return "SL";
  if (c >= '0' && c <= '9') return "SN";
  if (c == '.' || c == '?' || c == '!') return "SF";
  return "SY";
}

}  // namespace

DemoAnalyzer DemoAnalyzer::FromStream(std::istream& in) {
  DemoAnalyzer analyzer;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const size_t tab = s.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw Error(ErrorKind::kMalformedLine,
                  "line " + std::to_string(line) + ": missing TAB");
    }
    analyzer.Add(std::string(s.substr(0, tab)), ParseAnalysis(s.substr(tab + 1), line));
  }
  return analyzer;
}

DemoAnalyzer DemoAnalyzer::Builtin() {
  std::string text(kBuiltinDictionary);
  std::istringstream in(text);
  return FromStream(in);
}

void DemoAnalyzer::Add(std::string surface, std::vector<MorphemeSpec> analysis) {
  std::u32string key = DecodeUtf8OrThrow(surface);
  max_len_ = std::max(max_len_, key.size());
  dict_[std::move(key)] = std::move(analysis);
}

std::vector<MorphemeSpec> DemoAnalyzer::AnalyzeEojeol(std::u32string_view eojeol) const {
  std::vector<MorphemeSpec> out;
  std::u32string unknown;
  std::string_view unknown_tag;
  const auto flush_unknown = [&]() {
    if (unknown.empty()) return;
    out.push_back(MorphemeSpec{EncodeUtf8(unknown), std::string(unknown_tag)});
    unknown.clear();
  };

  size_t pos = 0;
  while (pos < eojeol.size()) {
    bool matched = false;
    for (size_t len = std::min(max_len_, eojeol.size() - pos); len > 0; --len) {
      const auto it = dict_.find(std::u32string(eojeol.substr(pos, len)));
      if (it == dict_.end()) continue;
      flush_unknown();
      out.insert(out.end(), it->second.begin(), it->second.end());
      pos += len;
      matched = true;
      break;
    }
    if (matched) continue;
    const std::string_view tag = UnknownTag(eojeol[pos]);
    if (!unknown.empty() && tag != unknown_tag) flush_unknown();
    unknown_tag = tag;
    unknown.push_back(eojeol[pos]);
    ++pos;
  }
  flush_unknown();
  return out;
}

AnalyzedSentence DemoAnalyzer::Analyze(std::string_view sentence,
                                       const ClassificationTable& table) const {
  const std::u32string text = DecodeUtf8OrThrow(sentence);
  AnalyzedSentence out;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    size_t end = pos;
    while (end < text.size() && !IsSpace(text[end])) ++end;
    if (end > pos) {
      const std::u32string_view eojeol(text.data() + pos, end - pos);
      const auto specs = AnalyzeEojeol(eojeol);
      out.push_back(AlignSurface(EncodeUtf8(eojeol), specs, table));
    }
    pos = end;
  }
  return out;
}

}  // namespace hanpiece
