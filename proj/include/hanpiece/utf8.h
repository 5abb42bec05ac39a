#ifndef HANPIECE_UTF8_H_
#define HANPIECE_UTF8_H_

#include <optional>
#include <string>
#include <string_view>

namespace hanpiece {

// Strict decode: rejects overlongs, surrogates and truncated sequences.
std::optional<std::u32string> DecodeUtf8(std::string_view text);

// Throws Error(kInvalidEncoding) on malformed input.
std::u32string DecodeUtf8OrThrow(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string* out);

// Number of scalars; assumes valid UTF-8.
size_t Utf8Length(std::string_view text);

}  // namespace hanpiece

#endif  // HANPIECE_UTF8_H_
