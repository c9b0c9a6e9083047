#pragma once

#include <stdexcept>
#include <string>

namespace gf4lc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph strings, matrices, catalogs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Sizes that disagree or exceed the 20-coordinate cap.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// Generator matrix does not describe a self-dual (n, 2^n) code.
class NotSelfDual : public Error {
 public:
  using Error::Error;
};

/// Generator rows span fewer than n dimensions over GF(2).
class RankDeficient : public NotSelfDual {
 public:
  using NotSelfDual::NotSelfDual;
};

/// Two generator rows have Hermitian trace inner product 1.
class NotSelfOrthogonal : public NotSelfDual {
 public:
  using NotSelfDual::NotSelfDual;
};

/// An orbit or brute-force closure outgrew its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// n!·S(G)/l did not divide exactly; always an enumeration bug.
class NonIntegerAutSize : public Error {
 public:
  using Error::Error;
};

/// Catalog header names a format version this build cannot read.
class VersionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace gf4lc
