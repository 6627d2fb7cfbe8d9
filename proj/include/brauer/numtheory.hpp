#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace brauer {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);

/// True when n = p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// Largest divisor of n coprime to p.
std::uint64_t coprime_part(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Throws NotPrime unless p is prime.
void require_prime(std::uint64_t p);

}  // namespace brauer
