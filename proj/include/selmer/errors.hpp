#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace selmer {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// p divides a where a Legendre symbol requires p not to.
class DivisibilityError : public Error {
 public:
  DivisibilityError(std::int64_t a, std::uint64_t p);
  std::int64_t numerator() const noexcept { return a_; }
  std::uint64_t prime() const noexcept { return p_; }

 private:
  std::int64_t a_;
  std::uint64_t p_;
};

class NotSquareFree : public Error {
 public:
  NotSquareFree(std::uint64_t n, std::uint64_t prime);
  std::uint64_t value() const noexcept { return n_; }
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t n_;
  std::uint64_t prime_;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t size, std::size_t rank);
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

// Neither diagonal block of a Schur-complement split is invertible.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class CoherenceError : public Error {
 public:
  CoherenceError(std::size_t i, std::size_t j, int expected, int actual);
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computed result disagrees with a proven statement: a bug, never bad input.
class Contradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace selmer
