#include "hanpiece/hangul.h"

#include <array>
#include <string>

#include "hanpiece/error.h"
#include "hanpiece/utf8.h"

namespace hanpiece {
namespace {

constexpr char32_t kCompatVowelBase = 0x314F;

// Compatibility consonant for each conjoining lead, in lead-index order.
constexpr std::array<char32_t, kLeadCount> kLeadToCompat = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141,
    0x3142, 0x3143, 0x3145, 0x3146, 0x3147, 0x3148, 0x3149,
    0x314A, 0x314B, 0x314C, 0x314D, 0x314E};

// Same for trails, starting at trail index 1.
constexpr std::array<char32_t, kTrailCount - 1> kTrailToCompat = {
    0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137, 0x3139, 0x313A,
    0x313B, 0x313C, 0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142, 0x3144,
    0x3145, 0x3146, 0x3147, 0x3148, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E};

bool IsCompatConsonant(char32_t c) { return c >= 0x3131 && c <= 0x314E; }
bool IsCompatVowel(char32_t c) {
  return c >= kCompatVowelBase && c < kCompatVowelBase + kVowelCount;
}

std::optional<char32_t> CompatConsonantToConjoining(char32_t c) {
  for (size_t i = 0; i < kTrailToCompat.size(); ++i) {
    if (kTrailToCompat[i] == c) return kTrailBase + 1 + static_cast<char32_t>(i);
  }
  for (size_t i = 0; i < kLeadToCompat.size(); ++i) {
    if (kLeadToCompat[i] == c) return kLeadBase + static_cast<char32_t>(i);
  }
  return std::nullopt;
}

}  // namespace

std::string_view CharClassName(CharClass c) {
  switch (c) {
    case CharClass::kHangulSyllable: return "HangulSyllable";
    case CharClass::kHangulJamo: return "HangulJamo";
    case CharClass::kAscii: return "Ascii";
    case CharClass::kOther: return "Other";
  }
  return "Other";
}

std::u32string JamoSequence::ToU32String() const {
  std::u32string out{lead, vowel};
  if (trail) out.push_back(*trail);
  return out;
}

JamoSequence DecomposeSyllable(char32_t syllable) {
  if (!IsHangulSyllable(syllable)) {
    throw Error(ErrorKind::kNotHangulSyllable,
                "U+" + std::to_string(static_cast<uint32_t>(syllable)) +
                    " is not a precomposed Hangul syllable");
  }
  const int index = static_cast<int>(syllable - kSyllableBase);
  const int lead = index / (kVowelCount * kTrailCount);
  const int vowel = (index % (kVowelCount * kTrailCount)) / kTrailCount;
  const int trail = index % kTrailCount;
  JamoSequence out{kLeadBase + static_cast<char32_t>(lead),
                   kVowelBase + static_cast<char32_t>(vowel), std::nullopt};
  if (trail != 0) out.trail = kTrailBase + static_cast<char32_t>(trail);
  return out;
}

char32_t ComposeJamo(const JamoSequence& jamo) {
  if (!IsLeadJamo(jamo.lead) || !IsVowelJamo(jamo.vowel) ||
      (jamo.trail && !IsTrailJamo(*jamo.trail))) {
    throw Error(ErrorKind::kInvalidJamo, "jamo outside the conjoining ranges");
  }
  const char32_t lead = jamo.lead - kLeadBase;
  const char32_t vowel = jamo.vowel - kVowelBase;
  const char32_t trail = jamo.trail ? *jamo.trail - kTrailBase : 0;
  return kSyllableBase + (lead * kVowelCount + vowel) * kTrailCount + trail;
}

char32_t ComposeJamo(std::u32string_view jamo) {
  if (jamo.size() == 1 && IsLeadJamo(jamo[0])) {
    throw Error(ErrorKind::kIncompleteBlock, "lead jamo without a vowel");
  }
  if (jamo.size() != 2 && jamo.size() != 3) {
    throw Error(ErrorKind::kInvalidJamo, "a block needs 2 or 3 jamo");
  }
  JamoSequence seq{jamo[0], jamo[1], std::nullopt};
  if (jamo.size() == 3) seq.trail = jamo[2];
  return ComposeJamo(seq);
}

std::u32string DecomposeText(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size() * 3);
  for (char32_t c : text) {
    if (IsHangulSyllable(c)) {
      const JamoSequence j = DecomposeSyllable(c);
      out.push_back(j.lead);
      out.push_back(j.vowel);
      if (j.trail) out.push_back(*j.trail);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string DecomposeText(std::string_view text) {
  return EncodeUtf8(DecomposeText(DecodeUtf8OrThrow(text)));
}

std::u32string ComposeText(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    if (IsLeadJamo(c) && i + 1 < text.size() && IsVowelJamo(text[i + 1])) {
      JamoSequence seq{c, text[i + 1], std::nullopt};
      ++i;
      if (i + 1 < text.size() && IsTrailJamo(text[i + 1])) {
        seq.trail = text[i + 1];
        ++i;
      }
      out.push_back(ComposeJamo(seq));
      continue;
    }
    // An open syllable followed by a trail absorbs it.
    if (IsTrailJamo(c) && !out.empty() && IsHangulSyllable(out.back()) &&
        (out.back() - kSyllableBase) % kTrailCount == 0) {
      out.back() += c - kTrailBase;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string ComposeText(std::string_view text) {
  return EncodeUtf8(ComposeText(DecodeUtf8OrThrow(text)));
}

CharClass ClassifyChar(char32_t c) {
  if (c < 0x80) return CharClass::kAscii;
  if (IsHangulSyllable(c)) return CharClass::kHangulSyllable;
  if ((c >= 0x1100 && c <= 0x11FF) || (c >= 0x3131 && c <= 0x318E) ||
      (c >= 0xA960 && c <= 0xA97F) || (c >= 0xD7B0 && c <= 0xD7FF)) {
    return CharClass::kHangulJamo;
  }
  return CharClass::kOther;
}

std::u32string ToDisplayJamo(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) {
    if (IsLeadJamo(c)) {
      c = kLeadToCompat[c - kLeadBase];
    } else if (IsVowelJamo(c)) {
      c = kCompatVowelBase + (c - kVowelBase);
    } else if (IsTrailJamo(c)) {
      c = kTrailToCompat[c - kTrailBase - 1];
    }
  }
  return out;
}

std::string ToDisplayJamo(std::string_view text) {
  return EncodeUtf8(ToDisplayJamo(DecodeUtf8OrThrow(text)));
}

std::u32string FromDisplayJamo(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) {
    if (IsCompatVowel(c)) {
      c = kVowelBase + (c - kCompatVowelBase);
    } else if (IsCompatConsonant(c)) {
      if (auto mapped = CompatConsonantToConjoining(c)) c = *mapped;
    }
  }
  return out;
}

}  // namespace hanpiece
