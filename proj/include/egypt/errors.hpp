#pragma once

#include <stdexcept>
#include <string>

namespace egypt {

enum class Errc {
  factorization_budget_exceeded,
  membership_undecidable,
  search_budget_exceeded,
  prefix_budget_exceeded,
  precondition_violated,
  internal_assertion_failed,
  limit_too_large,
  parse_error,
  infeasible_target,
  expansion_too_large,
};

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::factorization_budget_exceeded: return "FactorizationBudgetExceeded";
    case Errc::membership_undecidable: return "MembershipUndecidable";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::prefix_budget_exceeded: return "PrefixBudgetExceeded";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::internal_assertion_failed: return "InternalAssertionFailed";
    case Errc::limit_too_large: return "LimitTooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::infeasible_target: return "InfeasibleTarget";
    case Errc::expansion_too_large: return "ExpansionTooLarge";
  }
  return "UnknownError";
}

}  // namespace egypt
