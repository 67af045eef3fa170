#pragma once

#include <stdexcept>
#include <string>

namespace polydist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse requested for zero, a non-constant polynomial, or a non-unit ℓ-adic residue.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different coefficient rings (symbol registries, primes, precisions).
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// A symbol name that was not registered when the ring was built.
class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

/// Series or words over incompatible alphabets / levels / flavors.
class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

/// Precondition violations: out-of-range indices, bad degrees, malformed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series that was expected to be a Lie element modulo I_Y is not.
class NotLieError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydist
