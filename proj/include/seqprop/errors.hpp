// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqprop {

/// Byte offsets into a parsed input; start <= end <= input length.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

class OpenTermError : public Error {
 public:
  using Error::Error;
};

class DepthExceeded : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Raised for valuation tables that break their variety's equations.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Raised for independence questions that have no known countermodel.
class UnresolvedIndependence : public Error {
 public:
  using Error::Error;
};

}  // namespace seqprop
