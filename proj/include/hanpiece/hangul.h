#ifndef HANPIECE_HANGUL_H_
#define HANPIECE_HANGUL_H_

#include <optional>
#include <string>
#include <string_view>

namespace hanpiece {

inline constexpr char32_t kSyllableBase = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;
inline constexpr int kSyllableCount = 11172;
inline constexpr char32_t kLeadBase = 0x1100;
inline constexpr char32_t kVowelBase = 0x1161;
// Trail index 0 means "no trail"; the first real trail is kTrailBase + 1.
inline constexpr char32_t kTrailBase = 0x11A7;
inline constexpr int kLeadCount = 19;
inline constexpr int kVowelCount = 21;
inline constexpr int kTrailCount = 28;

enum class CharClass { kHangulSyllable, kHangulJamo, kAscii, kOther };

std::string_view CharClassName(CharClass c);

// A precomposed syllable split into conjoining jamo (U+1100 block).
struct JamoSequence {
  char32_t lead;
  char32_t vowel;
  std::optional<char32_t> trail;

  std::u32string ToU32String() const;
  friend bool operator==(const JamoSequence&, const JamoSequence&) = default;
};

constexpr bool IsHangulSyllable(char32_t c) {
  return c >= kSyllableBase && c <= kSyllableLast;
}
constexpr bool IsLeadJamo(char32_t c) {
  return c >= kLeadBase && c < kLeadBase + kLeadCount;
}
constexpr bool IsVowelJamo(char32_t c) {
  return c >= kVowelBase && c < kVowelBase + kVowelCount;
}
constexpr bool IsTrailJamo(char32_t c) {
  return c > kTrailBase && c < kTrailBase + kTrailCount;
}

// Throws Error(kNotHangulSyllable) outside U+AC00..U+D7A3.
JamoSequence DecomposeSyllable(char32_t syllable);

// Throws Error(kInvalidJamo) when a field is outside its conjoining range.
char32_t ComposeJamo(const JamoSequence& jamo);

// Accepts exactly lead+vowel or lead+vowel+trail. A lone lead raises
// kIncompleteBlock; anything else malformed raises kInvalidJamo.
char32_t ComposeJamo(std::u32string_view jamo);

// Replaces every precomposed syllable by its conjoining jamo and copies all
// other scalars through. Total.
std::u32string DecomposeText(std::u32string_view text);
// UTF-8 variant; throws Error(kInvalidEncoding) on malformed input.
std::string DecomposeText(std::string_view text);

// Canonical recomposition restricted to Hangul: L V -> LV, LV T -> LVT.
// Stray jamo that cannot form a block are left as they are.
std::u32string ComposeText(std::u32string_view text);
std::string ComposeText(std::string_view text);

CharClass ClassifyChar(char32_t c);

// Conjoining -> compatibility jamo (U+3131..U+3163) for display. Other
// scalars, including precomposed syllables, pass through.
std::u32string ToDisplayJamo(std::u32string_view text);
std::string ToDisplayJamo(std::string_view text);

// Compatibility jamo -> conjoining. A consonant maps to its trail form when
// one exists, otherwise to its lead form. Other scalars pass through.
std::u32string FromDisplayJamo(std::u32string_view text);

}  // namespace hanpiece

#endif  // HANPIECE_HANGUL_H_
