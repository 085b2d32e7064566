#pragma once

#include <stdexcept>
#include <string>

namespace circk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside a brute-force routine's size cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// A configured state/enumeration/rejection budget was exceeded.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class KMismatch : public Error {
 public:
  using Error::Error;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class NotBipartite : public Error {
 public:
  using Error::Error;
};

class InvalidPrecoloring : public Error {
 public:
  using Error::Error;
};

class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

// A check that a proven statement guarantees came out false. Carries a dump of
// the offending instance in what().
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class NonEquivalenceCloseness : public LemmaViolation {
 public:
  using LemmaViolation::LemmaViolation;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace circk
