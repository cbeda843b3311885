#pragma once

#include <stdexcept>
#include <string>

namespace ghznogo {

// Scenario file is syntactically or semantically invalid.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A tolerance-based check failed: norm drift, residual weight outside the
// effective subspace, unstable support classification, unitarity defect.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Two independent routes to the same result disagreed. Always a bug.
class InternalCheckError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace ghznogo
