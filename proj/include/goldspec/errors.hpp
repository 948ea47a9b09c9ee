#pragma once

#include <stdexcept>
#include <string>

namespace goldspec {

/// Invalid constructor/operation parameters; the message names the violated constraint.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a documented size cap.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Operation applied outside its mathematical domain (e.g. non-regular graph).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Violated API precondition (e.g. non-symmetric matrix passed to the eigensolver).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input text/bytes; carries a 1-based line or 0-based byte offset when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, long line = -1, long offset = -1)
        : std::runtime_error(what), line_(line), offset_(offset) {}
    long line() const { return line_; }
    long offset() const { return offset_; }

private:
    long line_;
    long offset_;
};

/// Requested closed form or analysis is not available for the given input.
class NotAvailableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace goldspec
