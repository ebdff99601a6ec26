#pragma once

#include <stdexcept>
#include <string>

namespace selmer3 {

enum class ErrorCode {
  kDegenerateCurve,
  kOutOfRange,
  kDiscMismatch,
  kPreconditionViolated,
  kUnfactorable,
  kBadReductionPrime,
  kParse,
  kInvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DegenerateCurve : Error {
  explicit DegenerateCurve(const std::string& w) : Error(ErrorCode::kDegenerateCurve, w) {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& w) : Error(ErrorCode::kOutOfRange, w) {}
};
struct DiscMismatch : Error {
  explicit DiscMismatch(const std::string& w) : Error(ErrorCode::kDiscMismatch, w) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& w)
      : Error(ErrorCode::kPreconditionViolated, w) {}
};
struct Unfactorable : Error {
  explicit Unfactorable(const std::string& w) : Error(ErrorCode::kUnfactorable, w) {}
};
struct BadReductionPrime : Error {
  explicit BadReductionPrime(const std::string& w)
      : Error(ErrorCode::kBadReductionPrime, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::kParse, w) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::kInvalidArgument, w) {}
};

}  // namespace selmer3
