#ifndef FPRES_ERROR_HPP_
#define FPRES_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpres {

/// Base class for all library errors. `code()` is a stable machine-readable
/// tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string const& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  std::string const& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NonAssociativeError : Error {
  NonAssociativeError(std::uint32_t i, std::uint32_t j, std::uint32_t k)
      : Error("NonAssociative",
              "(x*y)*z != x*(y*z) at indices (" + std::to_string(i) + ", "
                  + std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  std::uint32_t i, j, k;
};

struct BadIdentityError : Error {
  explicit BadIdentityError(std::string const& msg) : Error("BadIdentity", msg) {}
};

struct EmptyGeneratingSetError : Error {
  EmptyGeneratingSetError() : Error("EmptyGeneratingSet", "generating set must be nonempty") {}
};

struct NotIdempotentError : Error {
  explicit NotIdempotentError(std::uint32_t e)
      : Error("NotIdempotent", "element " + std::to_string(e) + " is not idempotent") {}
};

struct NotAMonoidError : Error {
  explicit NotAMonoidError(std::string const& msg) : Error("NotAMonoid", msg) {}
};

struct NotAGroupError : Error {
  explicit NotAGroupError(std::string const& msg) : Error("NotAGroup", msg) {}
};

struct BadMatrixShapeError : Error {
  explicit BadMatrixShapeError(std::string const& msg) : Error("BadMatrixShape", msg) {}
};

struct NotCompletelySimpleError : Error {
  explicit NotCompletelySimpleError(std::string const& msg)
      : Error("NotCompletelySimple", msg) {}
};

struct NotNormalizedError : Error {
  NotNormalizedError() : Error("NotNormalized", "structure matrix is not in normal form") {}
};

struct HomNotMonoidHomError : Error {
  HomNotMonoidHomError(std::size_t a, std::size_t b, std::string const& msg)
      : Error("HomNotMonoidHom",
              "map " + std::to_string(a) + " -> " + std::to_string(b) + ": " + msg),
        alpha(a),
        beta(b) {}
  std::size_t alpha, beta;
};

struct CompositionViolationError : Error {
  CompositionViolationError(std::size_t a, std::size_t b, std::size_t c)
      : Error("CompositionViolation",
              "hom composition fails on chain " + std::to_string(a) + " >= "
                  + std::to_string(b) + " >= " + std::to_string(c)),
        alpha(a),
        beta(b),
        gamma(c) {}
  std::size_t alpha, beta, gamma;
};

struct NotASemilatticeError : Error {
  explicit NotASemilatticeError(std::string const& msg) : Error("NotASemilattice", msg) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(std::string const& msg)
      : Error("DimensionMismatch", msg) {}
};

struct RingMismatchError : Error {
  explicit RingMismatchError(std::string const& msg) : Error("RingMismatch", msg) {}
};

struct LatticeMismatchError : Error {
  explicit LatticeMismatchError(std::string const& msg)
      : Error("LatticeMismatch", msg) {}
};

struct NotARightIdealError : Error {
  explicit NotARightIdealError(std::string const& msg) : Error("NotARightIdeal", msg) {}
};

struct IsoCheckFailedError : Error {
  explicit IsoCheckFailedError(std::string const& msg) : Error("IsoCheckFailed", msg) {}
};

struct NotRightZeroError : Error {
  explicit NotRightZeroError(std::string const& msg) : Error("NotRightZero", msg) {}
};

struct NotAnIdealError : Error {
  explicit NotAnIdealError(std::string const& msg) : Error("NotAnIdeal", msg) {}
};

struct NoTwoSidedIdentityError : Error {
  explicit NoTwoSidedIdentityError(std::string const& msg)
      : Error("NoTwoSidedIdentity", msg) {}
};

struct HypothesisViolationError : Error {
  explicit HypothesisViolationError(std::string const& which)
      : Error("HypothesisViolation", which), which(which) {}
  std::string which;
};

struct NotALeftGroupError : Error {
  explicit NotALeftGroupError(std::string const& msg) : Error("NotALeftGroup", msg) {}
};

struct NotASubgroupError : Error {
  explicit NotASubgroupError(std::string const& msg) : Error("NotASubgroup", msg) {}
};

struct NotALeftIdealError : Error {
  explicit NotALeftIdealError(std::string const& msg) : Error("NotALeftIdeal", msg) {}
};

struct InputNotAWitnessError : Error {
  explicit InputNotAWitnessError(std::string const& msg)
      : Error("InputNotAWitness", msg) {}
};

struct ParseError : Error {
  ParseError(std::size_t line, std::string const& reason)
      : Error("ParseError", "line " + std::to_string(line) + ": " + reason), line(line) {}
  std::size_t line;
};

struct VerificationFailedError : Error {
  explicit VerificationFailedError(std::string const& msg)
      : Error("VerificationFailed", msg) {}
};

}  // namespace fpres

#endif  // FPRES_ERROR_HPP_
