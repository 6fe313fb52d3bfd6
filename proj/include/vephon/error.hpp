#pragma once

#include <stdexcept>
#include <string>

namespace vephon {

// Error categories map 1:1 onto the CLI's stable stderr prefixes.
enum class ErrorKind {
  Parse,         // E-PARSE: malformed text, inventory lines, sequence structure
  Phonotactics,  // E-PHONOTACTICS: illegal tone/coda combination
  Coverage,      // E-COVERAGE: IPA phone with no mapping row
  Localize,      // E-LOCALIZE: projection produced an illegal syllable
  Validate,      // E-VALIDATE: inventory counts, manifest records, id mismatches
  Io,            // E-IO: missing or unreadable files
  Usage,         // E-USAGE: bad command line
};

inline const char* error_prefix(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "E-PARSE";
    case ErrorKind::Phonotactics: return "E-PHONOTACTICS";
    case ErrorKind::Coverage: return "E-COVERAGE";
    case ErrorKind::Localize: return "E-LOCALIZE";
    case ErrorKind::Validate: return "E-VALIDATE";
    case ErrorKind::Io: return "E-IO";
    case ErrorKind::Usage: return "E-USAGE";
  }
  return "E-UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* prefix() const { return error_prefix(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace vephon
