#pragma once

#include <stdexcept>
#include <string>

namespace ips {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two entries of a set description denote the same lattice point.
struct DuplicatePointError : Error {
    DuplicatePointError(std::size_t first, std::size_t second, const std::string& what)
        : Error(what), first_index(first), second_index(second) {}
    std::size_t first_index;
    std::size_t second_index;
};

// An operation that requires all pairwise distances to be integral met a pair
// that is not.
struct NonIntegralSetError : Error {
    using Error::Error;
};

// All points of the set lie on one straight line.
struct CollinearSetError : Error {
    using Error::Error;
};

// Two sets cannot share a lattice (different radicands after normalization).
struct LatticeMismatchError : Error {
    using Error::Error;
};

// A computation would exceed a documented resource ceiling.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace ips
