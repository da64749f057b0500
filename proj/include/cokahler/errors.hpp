#pragma once

#include <stdexcept>
#include <string>

namespace cokahler {

/// Root of the library's error hierarchy. what() is "<Kind>: <message>".
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& message)
      : std::runtime_error(std::string(kind) + ": " + message), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

/// Errors triggered by the caller's input values (bad matrices, bad documents,
/// inputs outside the model). The CLI maps these to exit code 1.
struct InputError : Error {
  using Error::Error;
};

/// Errors that signal a bug in this library rather than in the input.
/// The CLI maps these to exit code 2.
struct InternalError : Error {
  using Error::Error;
};

struct IntegralityError : InputError {
  explicit IntegralityError(const std::string& m) : InputError("IntegralityError", m) {}
};
struct NotUnimodularError : InputError {
  explicit NotUnimodularError(const std::string& m) : InputError("NotUnimodularError", m) {}
};
struct SingularMatrixError : InputError {
  explicit SingularMatrixError(const std::string& m) : InputError("SingularMatrixError", m) {}
};
struct InfiniteOrderError : InputError {
  explicit InfiniteOrderError(const std::string& m) : InputError("InfiniteOrderError", m) {}
};
struct DegeneracyError : InputError {
  explicit DegeneracyError(const std::string& m) : InputError("DegeneracyError", m) {}
};
struct NotInvariantError : InputError {
  explicit NotInvariantError(const std::string& m) : InputError("NotInvariantError", m) {}
};
struct NotSymplecticError : InputError {
  explicit NotSymplecticError(const std::string& m) : InputError("NotSymplecticError", m) {}
};
struct NoInvariantKahlerError : InputError {
  explicit NoInvariantKahlerError(const std::string& m) : InputError("NoInvariantKahlerError", m) {}
};
struct ParseError : InputError {
  explicit ParseError(const std::string& m) : InputError("ParseError", m) {}
};
struct ValidationError : InputError {
  explicit ValidationError(const std::string& m) : InputError("ValidationError", m) {}
};
struct UnknownCorpusError : InputError {
  explicit UnknownCorpusError(const std::string& m) : InputError("UnknownCorpusError", m) {}
};

struct DegreeError : InternalError {
  explicit DegreeError(const std::string& m) : InternalError("DegreeError", m) {}
};
struct DimensionError : InternalError {
  explicit DimensionError(const std::string& m) : InternalError("DimensionError", m) {}
};
struct InternalConsistencyError : InternalError {
  explicit InternalConsistencyError(const std::string& m)
      : InternalError("InternalConsistencyError", m) {}
};

}  // namespace cokahler
