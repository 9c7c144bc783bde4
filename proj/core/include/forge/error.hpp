#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

enum class Errc {
  DanglingFace,
  BadGrading,
  OrientationOverlap,
  Cycle,
  DuplicateId,
  UnknownId,
  NotAPath,
  NotThin,
  BoundaryMismatch,
  NotRound,
  NotSubmolecule,
  NotMolecule,
  NoLayering,
  NotOrderPreserving,
  NotAMap,
  Mismatch,
  ChecksFail,
  NotClosed,
  NotCollapsible,
  PreconditionFail,
  KNotInBoundary,
  NotInclusion,
  NotSubdivision,
  NotDegenerate,
  NotLocalEmbedding,
  Incompatible,
  OracleError,
  ParseError,
  UnknownVerb,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Raised by validation; carries every violated invariant, not just the first.
class ValidationError : public Error {
public:
  struct Violation {
    Errc code;
    std::string detail;
  };
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

}  // namespace forge
