#include "selmer/errors.hpp"

namespace selmer {

DivisibilityError::DivisibilityError(std::int64_t a, std::uint64_t p)
    : Error(std::to_string(p) + " divides " + std::to_string(a)), a_(a), p_(p) {}

NotSquareFree::NotSquareFree(std::uint64_t n, std::uint64_t prime)
    : Error("not square-free: " + std::to_string(n) + " is divisible by " +
            std::to_string(prime) + "^2"),
      n_(n),
      prime_(prime) {}

SingularMatrix::SingularMatrix(std::size_t size, std::size_t rank)
    : Error("singular " + std::to_string(size) + "x" + std::to_string(size) +
            " matrix (rank " + std::to_string(rank) + ")"),
      rank_(rank) {}

CoherenceError::CoherenceError(std::size_t i, std::size_t j, int expected, int actual)
    : Error("incoherent prime list: symbol at pair (" + std::to_string(i) + ", " +
            std::to_string(j) + ") is " + std::to_string(actual) + ", expected " +
            std::to_string(expected)),
      i_(i),
      j_(j) {}

}  // namespace selmer
