#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pptdata {

using Token = std::uint32_t;

/// A finite token sequence over a declared vocabulary.
///
/// `truncated` is set by the generators when the document hit its length
/// limit before all brackets were closed (Dyck) or a copy was completed (ww).
struct TokenSeq {
  std::vector<Token> tokens;
  std::uint32_t vocab_size = 0;
  bool truncated = false;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;
};

// Error hierarchy. The CLI maps each kind onto its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or input that violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration file or flag combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure: unreadable, unwritable or missing path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Corrupt or incompatible on-disk data (magic, version, checksum, truncation).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A requested quantity does not exist, e.g. a loss level the curve never reaches.
class NotReached : public Error {
 public:
  using Error::Error;
};

}  // namespace pptdata
