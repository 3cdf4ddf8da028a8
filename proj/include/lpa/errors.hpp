#ifndef LPA_ERRORS_HPP
#define LPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpa {

// Exit-code classes used by the CLI: usage/parse problems are distinct
// from checked domain failures (a witness search that ran out of bound,
// a realization attempted on a graph with sources, ...).
enum class ErrorKind {
  Parse,          // malformed input, unknown identifiers
  Domain,         // checked failure of an otherwise valid request
  Internal        // broken invariant; indicates a bug or a wrong phi
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), kind_(kind), code_(std::move(code)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }
private:
  ErrorKind kind_;
  std::string code_;
};

inline Error parse_error(const std::string& msg, int line = 0) {
  if (line > 0)
    return Error(ErrorKind::Parse, "SyntaxError", "line " + std::to_string(line) + ": " + msg);
  return Error(ErrorKind::Parse, "SyntaxError", msg);
}

#define LPA_DEFINE_ERROR(Name, Kind)                                  \
  inline Error Name(const std::string& msg) {                         \
    return Error(ErrorKind::Kind, #Name, msg);                        \
  }

LPA_DEFINE_ERROR(UnknownVertex, Parse)
LPA_DEFINE_ERROR(UnknownEdge, Parse)
LPA_DEFINE_ERROR(UnknownPath, Parse)
LPA_DEFINE_ERROR(DuplicateIdentifier, Parse)
LPA_DEFINE_ERROR(DanglingEndpoint, Parse)
LPA_DEFINE_ERROR(AlgebraMismatch, Parse)
LPA_DEFINE_ERROR(NotHomogeneous, Parse)
LPA_DEFINE_ERROR(ZeroHasNoDegree, Parse)
LPA_DEFINE_ERROR(NotApplicable, Parse)
LPA_DEFINE_ERROR(NoWitnessWithinBound, Domain)
LPA_DEFINE_ERROR(GraphHasSource, Domain)
LPA_DEFINE_ERROR(NotASource, Domain)
LPA_DEFINE_ERROR(NotIsolated, Domain)
LPA_DEFINE_ERROR(IsolatedVertex, Domain)
LPA_DEFINE_ERROR(DepthTooSmall, Domain)
LPA_DEFINE_ERROR(MultiEntryUnsupported, Domain)
LPA_DEFINE_ERROR(DecompositionFailure, Domain)
LPA_DEFINE_ERROR(InternalInvariantBreach, Internal)

#undef LPA_DEFINE_ERROR

} // namespace lpa

#endif
