#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookratio {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic primality test for 64-bit values.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime_above(std::uint64_t n);

/// Prime factorization by trial division, ascending primes. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Exponent of p in n (n > 0, p >= 2).
int valuation(std::uint64_t n, std::uint64_t p);

/// Exponent of p in n! (Legendre).
std::int64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// lcm that throws std::overflow_error instead of wrapping.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace hookratio
