#pragma once

#include <stdexcept>
#include <string>

namespace ndm {

/// Input rejected by a precondition or validation rule (bad m, a pair outside
/// J, an inconsistent lifting datum, unparseable syntax).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An internal consistency check failed on valid input: non-confluence, a
/// dimension mismatch, a nonzero Hopf residue.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

class CompletionBudgetExceeded : public CheckFailure {
 public:
  explicit CompletionBudgetExceeded(const std::string& what) : CheckFailure(what) {}
};

}  // namespace ndm
