#ifndef HANPIECE_ERROR_H_
#define HANPIECE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hanpiece {

enum class ErrorKind {
  kNotHangulSyllable,
  kIncompleteBlock,
  kInvalidJamo,
  kInvalidEncoding,
  kUnknownTag,
  kMalformedLine,
  kModeInputMismatch,
  kEmptyCorpus,
  kDanglingContinuation,
  kDuplicateEntry,
  kMissingSpecials,
  kEmptyInput,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this type. what() is prefixed
// with the kind name so diagnostics carry the error class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace hanpiece

#endif  // HANPIECE_ERROR_H_
