#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pbw {

// Operands built over different generator contexts or truncation orders.
class ContextError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An operation that needs degree-0 (or degree-1) data was handed something else.
class GradingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A product left the truncated basis of an algebra.
class DegreeOverflow : public std::runtime_error {
public:
  DegreeOverflow(std::string what, std::vector<int> tuple)
      : std::runtime_error(std::move(what)), tuple_(std::move(tuple)) {}
  const std::vector<int> &tuple() const { return tuple_; }

private:
  std::vector<int> tuple_;
};

// A finite slice exceeded the configured size cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A sign or normalization identity that must hold did not.
class ConventionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pbw
