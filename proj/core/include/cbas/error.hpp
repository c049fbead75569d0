#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A resource, matrix or gold file did not follow its documented format.
/// `line()` is 1-based; 0 means the error is not tied to a single line.
class FormatError : public Error {
 public:
  FormatError(std::string source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace cbas
