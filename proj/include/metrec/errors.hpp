#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "metrec/rational.hpp"

namespace metrec {

/// Base for every error the toolkit reports on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The matrix is not a predistance matrix. Indices are 0-based.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// D(i,j) > D(i,k) + D(k,j). Indices are 0-based.
class TriangleViolation : public Error {
 public:
  TriangleViolation(std::size_t i, std::size_t k, std::size_t j, Rational ij,
                    Rational ik, Rational kj);
  std::size_t i() const { return i_; }
  std::size_t k() const { return k_; }
  std::size_t j() const { return j_; }
  const Rational& d_ij() const { return ij_; }
  const Rational& d_ik() const { return ik_; }
  const Rational& d_kj() const { return kj_; }

 private:
  std::size_t i_, k_, j_;
  Rational ij_, ik_, kj_;
};

/// A recognizer was handed a matrix of the wrong order. `code()` is one of
/// "OrderNotPowerOfTwo", "OrderNot8", "OrderNot10".
class OrderError : public Error {
 public:
  OrderError(std::string code, std::size_t order);
  const std::string& code() const { return code_; }
  std::size_t order() const { return order_; }

 private:
  std::string code_;
  std::size_t order_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class NotATreeError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

/// A certificate did not reproduce the input matrix. This is a bug in a
/// recognizer, never an input problem.
class VerificationFailed : public std::logic_error {
 public:
  VerificationFailed(std::size_t i, std::size_t j, const Rational& expected,
                     const std::string& got);
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_, j_;
};

}  // namespace metrec
