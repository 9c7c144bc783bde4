#include "forge/error.hpp"

namespace forge {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DanglingFace: return "DanglingFace";
    case Errc::BadGrading: return "BadGrading";
    case Errc::OrientationOverlap: return "OrientationOverlap";
    case Errc::Cycle: return "Cycle";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownId: return "UnknownId";
    case Errc::NotAPath: return "NotAPath";
    case Errc::NotThin: return "NotThin";
    case Errc::BoundaryMismatch: return "BoundaryMismatch";
    case Errc::NotRound: return "NotRound";
    case Errc::NotSubmolecule: return "NotSubmolecule";
    case Errc::NotMolecule: return "NotMolecule";
    case Errc::NoLayering: return "NoLayering";
    case Errc::NotOrderPreserving: return "NotOrderPreserving";
    case Errc::NotAMap: return "NotAMap";
    case Errc::Mismatch: return "Mismatch";
    case Errc::ChecksFail: return "ChecksFail";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotCollapsible: return "NotCollapsible";
    case Errc::PreconditionFail: return "PreconditionFail";
    case Errc::KNotInBoundary: return "KNotInBoundary";
    case Errc::NotInclusion: return "NotInclusion";
    case Errc::NotSubdivision: return "NotSubdivision";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::NotLocalEmbedding: return "NotLocalEmbedding";
    case Errc::Incompatible: return "Incompatible";
    case Errc::OracleError: return "OracleError";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVerb: return "UnknownVerb";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

namespace {
std::string summarize(const std::vector<ValidationError::Violation>& vs) {
  std::string out = std::to_string(vs.size()) + " violation(s)";
  for (const auto& v : vs) {
    out += "; ";
    out += errc_name(v.code);
    out += " ";
    out += v.detail;
  }
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? Errc::ChecksFail : violations.front().code, summarize(violations)),
      violations_(std::move(violations)) {}

}  // namespace forge
