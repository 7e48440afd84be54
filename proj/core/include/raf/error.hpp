#pragma once

#include <stdexcept>
#include <string>

namespace raf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Newick, permutation, partition or pair-file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold (mismatched universes,
/// invalid parameters, instance too large for an exhaustive oracle, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A list of components does not partition the taxon universe.
class NotAPartition : public Error {
 public:
  using Error::Error;
};

/// A search exhausted its time budget.
class Timeout : public Error {
 public:
  using Error::Error;
};

}  // namespace raf
