#pragma once

#include <stdexcept>
#include <string>

namespace sptag {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A WER report was requested over an empty reference.
class EmptyReferenceError : public Error {
 public:
  EmptyReferenceError() : Error("reference is empty; WER is undefined") {}
};

// Quantiles were requested over an empty latency list.
class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty input") {}
};

// Endpointer latency needs reference word end times.
class MissingTimingsError : public Error {
 public:
  MissingTimingsError() : Error("reference carries no word end times") {}
};

// A synthetic corpus spec failed validation.
class InvalidSpecError : public Error {
 public:
  explicit InvalidSpecError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// A JSONL line could not be parsed or validated. Carries the 1-based
// line number so diagnostics can point at the offending record.
class ParseError : public Error {
 public:
  ParseError(size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace sptag
