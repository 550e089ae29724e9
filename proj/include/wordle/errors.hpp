#pragma once

#include <stdexcept>
#include <string>

namespace wordle {

// Caller broke a documented precondition (length mismatch, hidden word not in
// the vocabulary, empty candidate set, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input data could not be turned into a usable vocabulary or report.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Observed feedback is inconsistent with every remaining candidate. The
// solver state is left untouched when this is thrown.
class ContradictionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wordle
