#pragma once

#include <stdexcept>
#include <string>

namespace schurlc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotDominated : public Error {
 public:
  using Error::Error;
};

class NegativeEntry : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class NotCentred : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

class InvalidFamilyPoint : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& what, int index)
      : Error(what), index_(index) {}
  // 1-based position of the first violated coordinate.
  int index() const { return index_; }

 private:
  int index_;
};

class NotLRInput : public Error {
 public:
  using Error::Error;
};

class InternalNonSemistandard : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace schurlc
