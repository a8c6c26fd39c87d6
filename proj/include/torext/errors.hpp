#pragma once

#include <stdexcept>
#include <string>

namespace torext {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree, or two objects belong to different models.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// A twist factor's class lies outside the sublattice its locus permits, or a
// factor has a locus the operation does not accept.
class LocusError : public Error {
 public:
  using Error::Error;
};

class NotWeaklyTorelli : public Error {
 public:
  using Error::Error;
};

// The difference map system has no solution although the word is weakly
// Torelli. Signals a broken internal invariant.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotCompletelyReducible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace torext
