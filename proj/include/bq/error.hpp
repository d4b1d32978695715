#pragma once

#include <stdexcept>
#include <string>

namespace bq {

// Malformed input text (braid words, presentations, table files).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a mathematical precondition.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bq
