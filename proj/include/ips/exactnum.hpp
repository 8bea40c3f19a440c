#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ips/errors.hpp"

namespace ips {

// All predicates in this library run on exact arbitrary-precision integers.
// Squared coordinate differences of the largest sets exceed 10^21, so no
// fixed-width type is safe.
using Integer = boost::multiprecision::cpp_int;

// Factorization inputs above this bit length are rejected; the rho kernel is
// tuned for the ~10^22 magnitudes this library actually produces.
inline constexpr unsigned kMaxFactorizationBits = 200;

struct IsqrtResult {
    Integer root;  // floor(sqrt(n))
    bool exact;    // root * root == n
};

// Integer square root by Newton iteration; no floating point involved for
// inputs beyond 64 bits.
IsqrtResult isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

// Deterministic Miller-Rabin: a base set proven complete below 2^64, a fixed
// witness list above.
bool is_prime(const Integer& n);

// prime -> exponent, primes increasing, exponents >= 1. factorize(1) is {}.
using Factorization = std::map<Integer, unsigned>;

// Trial division over a fixed small-prime table, then Brent's rho with
// deterministic seeding. Identical inputs give identical outputs.
Factorization factorize(const Integer& n);

Integer factorization_value(const Factorization& f);

// Exponent-wise sum: factorization of the product of the two values.
Factorization factorization_product(const Factorization& a, const Factorization& b);

// Factorization of value^e.
Factorization factorization_power(const Factorization& f, unsigned e);

struct SquarefreeDecomposition {
    Integer squarefree;  // k
    Integer root;        // m, with n == k * m^2
};

SquarefreeDecomposition squarefree_part(const Integer& n);
SquarefreeDecomposition squarefree_part(const Factorization& f);

struct DivisorPair {
    Integer u;
    Integer v;  // u * v == n, u <= v
};

// Every unordered divisor pair of the factored value, ordered by increasing u.
std::vector<DivisorPair> divisor_pairs(const Factorization& f);

std::uint64_t divisor_count(const Factorization& f);

}  // namespace ips
