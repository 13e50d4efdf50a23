#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace smashkit::numth {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/// (p, h) with n = p^h, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Exact integer square root, or nullopt if n is not a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

bool is_power_of_two(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace smashkit::numth
