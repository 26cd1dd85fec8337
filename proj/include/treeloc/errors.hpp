#pragma once

#include <stdexcept>
#include <string>

namespace treeloc {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a map (t = 0 for phi, t = alpha for psi, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// (n, r) outside the admissible grid n >= 8, 1 <= r <= floor(n/4).
class OutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class BadVertexId : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class PatternNotFound : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Malformed external input (tree files, number literals).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace treeloc
