#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rcpower {

/// All positive divisors of n in ascending order. n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// True for 1 (p^0) and for every p^a with p prime, a >= 1.
bool is_prime_power(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace rcpower
