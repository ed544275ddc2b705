#include "tropdet/error.hpp"

namespace tropical {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::NonCoprime: return "k and l are not coprime";
    case Errc::WrongOrder: return "k must not exceed l";
    case Errc::Overflow: return "arithmetic overflow";
    case Errc::Parse: return "parse error";
    case Errc::TooLarge: return "problem too large";
    case Errc::UnequalRowSums: return "row sums differ";
    case Errc::WrongOrientation: return "matrix has more rows than columns";
    case Errc::InfeasiblePair: return "infeasible (x, y) pair";
    case Errc::PreconditionViolated: return "precondition violated";
    case Errc::CapExceeded: return "enumeration cap exceeded";
    case Errc::PostconditionFailed: return "postcondition failed";
  }
  return "unknown error";
}

}  // namespace tropical
