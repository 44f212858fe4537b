#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcw {

/// Malformed rational text. `position` is the byte offset of the offending
/// character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Measure parameters outside the admissible domain beta - s > -1.
class IntegrabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Singular Gram block; carries the offending parameters in the message.
class DegenerateGramError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series composition (exp, binomial) fed an argument with nonzero constant
/// term.
class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mcw
