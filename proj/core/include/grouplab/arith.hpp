#pragma once

#include <cstdint>
#include <vector>

namespace grouplab {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

/// If n = p^k with p prime and k >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod);

/// Smallest generator of the multiplicative group of F_p.
std::uint64_t primitive_root(std::uint64_t p);

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace grouplab
