#include "hanpiece/error.h"

namespace hanpiece {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHangulSyllable: return "NotHangulSyllable";
    case ErrorKind::kIncompleteBlock: return "IncompleteBlock";
    case ErrorKind::kInvalidJamo: return "InvalidJamo";
    case ErrorKind::kInvalidEncoding: return "InvalidEncoding";
    case ErrorKind::kUnknownTag: return "UnknownTag";
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kModeInputMismatch: return "ModeInputMismatch";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kDanglingContinuation: return "DanglingContinuation";
    case ErrorKind::kDuplicateEntry: return "DuplicateEntry";
    case ErrorKind::kMissingSpecials: return "MissingSpecials";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace hanpiece
