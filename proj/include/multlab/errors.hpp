#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t offset)
      : ParseError("unknown variable '" + name + "'", offset), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class RingSpecError : public Error {
 public:
  RingSpecError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidPresentation : public Error {
  using Error::Error;
};
class NotArtinianAtCap : public Error {
  using Error::Error;
};
class NonMinimalPresentation : public Error {
  using Error::Error;
};
class NonHomogeneous : public Error {
  using Error::Error;
};
class SaturationFailure : public Error {
  using Error::Error;
};
class NotFiniteDimensional : public Error {
  using Error::Error;
};
class EmbeddingDimensionTooSmall : public Error {
  using Error::Error;
};
class HypothesisViolation : public Error {
  using Error::Error;
};
class NonMinimalResolution : public Error {
  using Error::Error;
};
class NoCandidateD : public Error {
  using Error::Error;
};
class Inapplicable : public Error {
  using Error::Error;
};
class SeriesOverflow : public Error {
  using Error::Error;
};

}  // namespace multlab
