#ifndef GRAPHSUM_ERROR_HPP_
#define GRAPHSUM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace graphsum {

// Base class for every error raised by the library. `module()` names the
// pipeline stage that failed so the CLI can report provenance.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string &message)
      : std::runtime_error(message), module_(std::move(module)) {}

  const std::string &module() const noexcept { return module_; }

 private:
  std::string module_;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  IoError(std::string module, const std::string &path, const std::string &what)
      : Error(std::move(module), path + ": " + what), path_(path) {}

  const std::string &path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A document has no usable body (empty after trimming or splitting).
class MalformedDocumentError : public Error {
 public:
  using Error::Error;
};

// Input that does not follow a documented file format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration values or unreadable configuration resources.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphsum

#endif  // GRAPHSUM_ERROR_HPP_
